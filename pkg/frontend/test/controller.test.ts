import { beforeEach, describe, expect, it } from "vitest";

import { CliBridge } from "../src/cliBridge.js";
import { Controller } from "../src/controller.js";
import { atEngine, demoDocument } from "./util.js";

const demo = demoDocument();

describe("controller", () => {
  let ui: Controller;

  beforeEach(() => {
    ui = new Controller(new CliBridge());
  });

  it("loads a valid document and renders a frame", async () => {
    expect(await ui.load(demo)).toBe(true);
    expect(ui.banner).toBeNull();
    expect(ui.svg).toContain("<svg");
    expect(ui.camera).not.toBeNull();
  });

  it("keeps the previous scene when a load is rejected", async () => {
    await ui.load(demo);
    const frame = ui.svg;
    const bad = demo.replace("radius 26.0", "radius -26.0");
    expect(await ui.load(bad)).toBe(false);
    expect(ui.banner).toMatch(/rejected/);
    expect(ui.svg).toBe(frame);
  });

  it("maps canvas pixels to engine coordinates through the camera", async () => {
    await ui.load(demo);
    const [px, py] = atEngine(ui, 380, 60);
    const p = ui.toEngine(px, py);
    expect(p.x).toBe(380);
    expect(p.y).toBe(60);
  });

  it("covers toggle changes only the overlay", async () => {
    await ui.load(demo);
    expect(ui.svg).not.toContain("cover-node");
    await ui.toggleCovers();
    expect(ui.svg).toContain("cover-node");
    await ui.toggleCovers();
    expect(ui.svg).not.toContain("cover-node");
  });

  it("ignores pointer input before a scene is loaded", async () => {
    await ui.pointerMove(10, 10);
    await ui.pointerUp(10, 10);
    expect(ui.exportTrace()).toBe("");
  });

  it("recovers from a lost release by closing the gesture", async () => {
    await ui.load(demo);
    const [px, py] = atEngine(ui, 380, 60);
    await ui.pointerDown(px, py, "primary");
    await ui.pointerDown(px + 5, py, "primary");
    const kinds = ui
      .exportTrace()
      .trim()
      .split("\n")
      .map((l) => l.split(" ")[1]);
    expect(kinds).toEqual(["press", "release", "press"]);
    await ui.pointerUp(px + 5, py);
  });

  it("saving an untouched scene returns the document unchanged", async () => {
    await ui.load(demo);
    expect(await ui.saveLayout()).toBe(demo);
  });
});
