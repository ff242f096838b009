// Shared scaffolding of the UI test suite: reading layout documents the
// way a human reads the saved file, scripting canvas coordinates, and
// an independent CLI replay path that bypasses the bridge code.

import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { Controller } from "../src/controller.js";

const here = dirname(fileURLToPath(import.meta.url));

export function demoDocument(): string {
  return readFileSync(join(here, "..", "public", "demo.layout"), "utf-8");
}

/** Raw text of one field inside an object block of a layout document. */
export function getField(doc: string, objectId: string, field: string): string {
  const lines = doc.split("\n");
  const start = lines.findIndex((l) => l.startsWith(`object ${objectId} `));
  if (start < 0) throw new Error(`no object ${objectId}`);
  for (let i = start + 1; i < lines.length; i++) {
    const line = lines[i]!;
    if (!line.startsWith("  ")) break;
    if (line.startsWith(`  ${field} `)) return line.slice(field.length + 3);
  }
  throw new Error(`object ${objectId} has no field ${field}`);
}

export function getNumbers(doc: string, objectId: string, field: string): number[] {
  return getField(doc, objectId, field).split(" ").map(Number);
}

/** Canvas coordinates that the controller maps back to the engine point. */
export function atEngine(ui: Controller, x: number, y: number): [number, number] {
  const cam = ui.camera;
  if (!cam) throw new Error("controller has no camera");
  return [x - cam.x, -y - cam.y];
}

/** Engine midpoint of the left edge of a group frame in a rendered SVG. */
export function frameLeftEdge(svg: string, groupId: string): { x: number; y: number } {
  const lines = svg.split("\n");
  const mark = lines.indexOf(`<!-- ${groupId} -->`);
  if (mark < 0) throw new Error(`no marker for ${groupId}`);
  const poly = lines[mark + 1]!;
  if (!poly.includes("stroke-dasharray")) throw new Error("no frame polygon");
  const pts = poly
    .match(/points="([^"]+)"/)![1]!
    .split(" ")
    .map((p) => p.split(",").map(Number) as [number, number]);
  const minX = Math.min(...pts.map((p) => p[0]));
  const edgeYs = pts.filter((p) => p[0] === minX).map((p) => -p[1]);
  return { x: minX, y: (Math.min(...edgeYs) + Math.max(...edgeYs)) / 2 };
}

/** Headless replay through the CLI, independent of the bridge classes. */
export function replayCli(layout: string, trace: string): string {
  const dir = mkdtempSync(join(tmpdir(), "ui-equiv-"));
  try {
    writeFileSync(join(dir, "a.layout"), layout);
    writeFileSync(join(dir, "a.trace"), trace);
    const res = spawnSync(
      "movables",
      ["replay", join(dir, "a.layout"), join(dir, "a.trace")],
      { encoding: "utf-8" },
    );
    if (res.status !== 0) {
      throw new Error(`replay failed: ${res.stderr}`);
    }
    return res.stdout;
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}
