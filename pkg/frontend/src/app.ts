// Page wiring: canvas, toolbar and pointer plumbing around the
// controller. Pointer events are queued and fed to the controller one
// at a time; queued move events collapse to the newest so a fast mouse
// never outruns the engine round trip.

import { HttpBridge } from "./bridge.js";
import { Controller } from "./controller.js";
import type { Button } from "./trace.js";

const controller = new Controller(new HttpBridge());

// DOM
const root = document.createElement("div");
root.className = "wrapper";
document.body.append(root);

const bar = document.createElement("div");
bar.className = "toolbar";
root.append(bar);

const fileInput = document.createElement("input");
fileInput.type = "file";
fileInput.accept = ".layout,text/plain";
bar.append(fileInput);

const saveBtn = document.createElement("button");
saveBtn.textContent = "Save layout";
bar.append(saveBtn);

const coversLabel = document.createElement("label");
const coversBox = document.createElement("input");
coversBox.type = "checkbox";
coversLabel.append(coversBox, document.createTextNode(" covers"));
bar.append(coversLabel);

const banner = document.createElement("div");
banner.className = "banner";
banner.style.display = "none";
root.append(banner);

const canvas = document.createElement("canvas");
canvas.width = 640;
canvas.height = 480;
root.append(canvas);
const ctx = canvas.getContext("2d")!;

const statusLine = document.createElement("div");
statusLine.className = "status";
root.append(statusLine);

// Painting: the engine hands back a complete SVG frame; the canvas is
// a dumb blitter positioning it under the fixed camera.
let painting = false;
async function paint() {
  if (!controller.svg || !controller.camera || painting) return;
  painting = true;
  const cam = controller.camera;
  if (canvas.width !== cam.w) canvas.width = cam.w;
  if (canvas.height !== cam.h) canvas.height = cam.h;
  const frame = controller.svg;
  const url = URL.createObjectURL(new Blob([frame], { type: "image/svg+xml" }));
  try {
    const img = new Image();
    await new Promise((ok, bad) => {
      img.onload = ok;
      img.onerror = bad;
      img.src = url;
    });
    const vbm = frame.match(/viewBox="([^"]+)"/);
    const vb = (vbm![1] as string).split(/\s+/).map(Number);
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    ctx.drawImage(img, vb[0]! - cam.x, vb[1]! - cam.y, vb[2]!, vb[3]!);
  } finally {
    URL.revokeObjectURL(url);
    painting = false;
  }
  statusLine.textContent = controller.status;
  banner.style.display = controller.banner ? "" : "none";
  banner.textContent = controller.banner ?? "";
}

// Event queue
type Job = { kind: "down" | "move" | "up"; x: number; y: number; button?: Button };
const queue: Job[] = [];
let pumping = false;

function enqueue(job: Job) {
  if (job.kind === "move" && queue.at(-1)?.kind === "move") queue.pop();
  queue.push(job);
  void pump();
}

async function pump() {
  if (pumping) return;
  pumping = true;
  while (queue.length) {
    const job = queue.shift()!;
    if (job.kind === "down") await controller.pointerDown(job.x, job.y, job.button!);
    else if (job.kind === "move") await controller.pointerMove(job.x, job.y);
    else await controller.pointerUp(job.x, job.y);
    await paint();
  }
  pumping = false;
}

canvas.addEventListener("contextmenu", (e) => e.preventDefault());

canvas.addEventListener("mousedown", (e) => {
  if (e.button !== 0 && e.button !== 2) return;
  const button: Button = e.button === 2 ? "secondary" : "primary";
  enqueue({ kind: "down", x: e.offsetX, y: e.offsetY, button });
});

canvas.addEventListener("mousemove", (e) => {
  if (controller.dragging) enqueue({ kind: "move", x: e.offsetX, y: e.offsetY });
});

window.addEventListener("mouseup", (e) => {
  const rect = canvas.getBoundingClientRect();
  enqueue({ kind: "up", x: e.clientX - rect.left, y: e.clientY - rect.top });
});

// Toolbar actions
fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  await controller.load(await file.text());
  await paint();
});

saveBtn.addEventListener("click", async () => {
  const doc = await controller.saveLayout();
  const url = URL.createObjectURL(new Blob([doc], { type: "text/plain" }));
  const a = document.createElement("a");
  a.href = url;
  a.download = "scene.layout";
  a.click();
  URL.revokeObjectURL(url);
});

coversBox.addEventListener("change", async () => {
  await controller.toggleCovers();
  await paint();
});

// Initial scene: ?layout= names a document to fetch
const param = new URLSearchParams(location.search).get("layout");
const initial = param ?? "public/demo.layout";
fetch(initial)
  .then((r) => {
    if (!r.ok) throw new Error(`${r.status} ${r.statusText}`);
    return r.text();
  })
  .then(async (doc) => {
    await controller.load(doc);
    await paint();
  })
  .catch((err) => {
    banner.style.display = "";
    banner.textContent = `could not fetch ${initial}: ${err}`;
  });
