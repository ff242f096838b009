// View-model of the page, free of DOM concerns so a test can drive it
// exactly like the event handlers do. The scene of record is a layout
// document plus the recorded trace; every picture and every saved
// document comes back from the engine, never from local geometry.

import type { EngineBridge } from "./bridge.js";
import type { Button } from "./trace.js";
import { ProtocolError, SessionRecorder } from "./trace.js";
import type { Box } from "./viewbox.js";
import { cameraFor, parseViewBox } from "./viewbox.js";

export interface EnginePoint {
  x: number;
  y: number;
}

export class Controller {
  svg = "";
  status = "no scene";
  banner: string | null = null;
  covers = false;
  camera: Box | null = null;

  private baseDoc: string | null = null;
  private recorder = new SessionRecorder();

  constructor(private bridge: EngineBridge) {}

  get hasScene(): boolean {
    return this.baseDoc !== null;
  }

  get dragging(): boolean {
    return this.recorder.isPressed;
  }

  /** Replace the scene; a bad document leaves the current one alone. */
  async load(doc: string): Promise<boolean> {
    const issues = await this.bridge.validate(doc);
    if (issues.length) {
      this.banner = `document rejected: ${issues[0]}`;
      return false;
    }
    this.baseDoc = doc;
    this.recorder.reset();
    this.banner = null;
    this.camera = null;
    this.status = "scene loaded";
    await this.refresh();
    return true;
  }

  /** Canvas pixel to engine coordinates (engine y grows upward). */
  toEngine(px: number, py: number): EnginePoint {
    if (!this.camera) throw new Error("no camera yet");
    return { x: this.camera.x + px, y: -(this.camera.y + py) };
  }

  async pointerDown(px: number, py: number, button: Button): Promise<void> {
    if (!this.hasScene) return;
    const p = this.toEngine(px, py);
    if (this.recorder.isPressed) {
      // a press while pressed means we lost a release upstream; close
      // the old gesture here and start the new one cleanly
      this.recorder.release(p.x, p.y);
    }
    this.recorder.press(p.x, p.y, button);
    this.status = `dragging (${button})`;
    await this.refresh();
  }

  async pointerMove(px: number, py: number): Promise<void> {
    if (!this.hasScene || !this.recorder.isPressed) return;
    const p = this.toEngine(px, py);
    this.recorder.move(p.x, p.y);
    await this.refresh();
  }

  async pointerUp(px: number, py: number): Promise<void> {
    if (!this.hasScene || !this.recorder.isPressed) return;
    const p = this.toEngine(px, py);
    try {
      this.recorder.release(p.x, p.y);
    } catch (err) {
      if (!(err instanceof ProtocolError)) throw err;
    }
    this.status = `idle, ${this.recorder.length} events recorded`;
    await this.refresh();
  }

  async toggleCovers(): Promise<void> {
    this.covers = !this.covers;
    if (this.hasScene) await this.refresh();
  }

  /** Engine-produced document of the current state. */
  async saveLayout(): Promise<string> {
    if (this.baseDoc === null) throw new Error("no scene loaded");
    return this.bridge.replay(this.baseDoc, this.recorder.exportTrace());
  }

  exportTrace(): string {
    return this.recorder.exportTrace();
  }

  private async refresh(): Promise<void> {
    if (this.baseDoc === null) return;
    this.svg = await this.bridge.render(
      this.baseDoc,
      this.recorder.exportTrace(),
      this.covers,
    );
    if (!this.camera) this.camera = cameraFor(parseViewBox(this.svg));
  }
}
