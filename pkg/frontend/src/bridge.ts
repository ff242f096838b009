// The engine lives outside the page. Everything the UI needs goes
// through three messages built on the layout and trace text formats:
// replay a trace onto a document, render a document+trace to SVG, and
// validate a document. The UI never owns geometry.

export interface EngineBridge {
  /** Final layout document after applying the trace to the document. */
  replay(layout: string, trace: string): Promise<string>;
  /** SVG picture of the document after the trace, covers optional. */
  render(layout: string, trace: string, covers: boolean): Promise<string>;
  /** Empty list when the document is well-formed and consistent. */
  validate(layout: string): Promise<string[]>;
}

/** Browser-side bridge: posts to the dev server, which runs the CLI. */
export class HttpBridge implements EngineBridge {
  constructor(private base = "") {}

  async replay(layout: string, trace: string): Promise<string> {
    return this.post("/api/replay", { layout, trace });
  }

  async render(layout: string, trace: string, covers: boolean): Promise<string> {
    return this.post("/api/render", { layout, trace, covers });
  }

  async validate(layout: string): Promise<string[]> {
    const text = await this.post("/api/validate", { layout });
    return text === "" ? [] : text.split("\n");
  }

  private async post(path: string, body: unknown): Promise<string> {
    const res = await fetch(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!res.ok) throw new Error(await res.text());
    return res.text();
  }
}
