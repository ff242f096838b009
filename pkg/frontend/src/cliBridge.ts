// Node-side bridge: spawns the movables CLI per message. Used by the
// dev server and by the test suite; never imported from browser code.

import { spawnSync } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import type { EngineBridge } from "./bridge.js";

function run(args: string[]): { code: number; out: string; err: string } {
  const res = spawnSync("movables", args, { encoding: "utf-8" });
  if (res.error) throw res.error;
  return { code: res.status ?? 1, out: res.stdout, err: res.stderr };
}

/** Runs fn with the given files written into a fresh temp directory. */
function withFiles<T>(
  files: Record<string, string>,
  fn: (dir: string) => T,
): T {
  const dir = mkdtempSync(join(tmpdir(), "movables-ui-"));
  try {
    for (const [name, text] of Object.entries(files)) {
      writeFileSync(join(dir, name), text);
    }
    return fn(dir);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

export class CliBridge implements EngineBridge {
  async replay(layout: string, trace: string): Promise<string> {
    if (trace === "") return layout;
    return withFiles({ "s.layout": layout, "s.trace": trace }, (dir) => {
      const res = run(["replay", join(dir, "s.layout"), join(dir, "s.trace")]);
      if (res.code !== 0) throw new Error(res.err.trim());
      return res.out;
    });
  }

  async render(layout: string, trace: string, covers: boolean): Promise<string> {
    const doc = await this.replay(layout, trace);
    return withFiles({ "s.layout": doc }, (dir) => {
      const args = ["render", join(dir, "s.layout")];
      if (covers) args.push("--covers");
      const res = run(args);
      if (res.code !== 0) throw new Error(res.err.trim());
      return res.out;
    });
  }

  async validate(layout: string): Promise<string[]> {
    return withFiles({ "s.layout": layout }, (dir) => {
      const res = run(["validate", join(dir, "s.layout")]);
      if (res.code === 0) return [];
      const lines = res.err.trim().split("\n");
      // diagnostics carry the temp path; show only the message part
      return lines.map((l) => l.replace(join(dir, "s.layout") + ":", ""));
    });
  }
}
