// The engine's SVG carries a content-derived viewBox; the view keeps a
// fixed camera instead so the picture does not swim while dragging.

export interface Box {
  x: number;
  y: number;
  w: number;
  h: number;
}

export function parseViewBox(svg: string): Box {
  const m = svg.match(/viewBox="([^"]+)"/);
  if (!m || !m[1]) throw new Error("svg has no viewBox");
  const parts = m[1].trim().split(/\s+/).map(Number);
  if (parts.length !== 4 || parts.some((v) => !Number.isFinite(v))) {
    throw new Error(`bad viewBox: ${m[1]}`);
  }
  const [x, y, w, h] = parts as [number, number, number, number];
  return { x, y, w, h };
}

/** A camera that covers the given viewBox with some breathing room. */
export function cameraFor(vb: Box, pad = 40): Box {
  return {
    x: Math.floor(vb.x - pad),
    y: Math.floor(vb.y - pad),
    w: Math.ceil(vb.w + 2 * pad),
    h: Math.ceil(vb.h + 2 * pad),
  };
}
