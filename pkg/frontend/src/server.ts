// Dev server: serves the static page and proxies the three engine
// messages to the movables CLI. No dependencies beyond node builtins.

import { readFile } from "node:fs/promises";
import { createServer } from "node:http";
import type { IncomingMessage, ServerResponse } from "node:http";
import { extname, join, normalize } from "node:path";

import { CliBridge } from "./cliBridge.js";

const bridge = new CliBridge();
const rootDir = join(import.meta.dirname, "..");
const port = Number(process.env.PORT ?? 8720);

const TYPES: Record<string, string> = {
  ".html": "text/html; charset=utf-8",
  ".js": "text/javascript; charset=utf-8",
  ".css": "text/css; charset=utf-8",
  ".svg": "image/svg+xml",
  ".layout": "text/plain; charset=utf-8",
};

function body(req: IncomingMessage): Promise<string> {
  return new Promise((ok, bad) => {
    let text = "";
    req.on("data", (chunk) => (text += chunk));
    req.on("end", () => ok(text));
    req.on("error", bad);
  });
}

async function api(req: IncomingMessage, res: ServerResponse, url: URL) {
  const args = JSON.parse(await body(req)) as {
    layout: string;
    trace?: string;
    covers?: boolean;
  };
  try {
    let text: string;
    if (url.pathname === "/api/replay") {
      text = await bridge.replay(args.layout, args.trace ?? "");
    } else if (url.pathname === "/api/render") {
      text = await bridge.render(args.layout, args.trace ?? "", !!args.covers);
    } else {
      text = (await bridge.validate(args.layout)).join("\n");
    }
    res.writeHead(200, { "content-type": "text/plain; charset=utf-8" });
    res.end(text);
  } catch (err) {
    res.writeHead(422, { "content-type": "text/plain; charset=utf-8" });
    res.end(String(err instanceof Error ? err.message : err));
  }
}

async function file(res: ServerResponse, path: string) {
  const safe = normalize(path).replace(/^(\.\.[/\\])+/, "");
  try {
    const data = await readFile(join(rootDir, safe));
    res.writeHead(200, {
      "content-type": TYPES[extname(safe)] ?? "application/octet-stream",
    });
    res.end(data);
  } catch {
    res.writeHead(404);
    res.end("not found");
  }
}

createServer(async (req, res) => {
  const url = new URL(req.url ?? "/", `http://${req.headers.host}`);
  if (req.method === "POST" && url.pathname.startsWith("/api/")) {
    await api(req, res, url);
  } else if (url.pathname === "/") {
    await file(res, "index.html");
  } else {
    await file(res, url.pathname.slice(1));
  }
}).listen(port, () => {
  console.log(`movables ui at http://localhost:${port}/`);
});
