// Pointer session recording in the engine's trace format:
// one event per line, "seq kind button x y", button "-" except on press.

export type Button = "primary" | "secondary";
export type EventKind = "press" | "move" | "release";

export interface TraceEvent {
  seq: number;
  kind: EventKind;
  button: Button | null;
  x: number;
  y: number;
}

export class ProtocolError extends Error {}

/** Collects press/move/release events and renders the trace text. */
export class SessionRecorder {
  private events: TraceEvent[] = [];
  private pressed = false;

  get length(): number {
    return this.events.length;
  }

  get isPressed(): boolean {
    return this.pressed;
  }

  press(x: number, y: number, button: Button): void {
    if (this.pressed) throw new ProtocolError("press while pressed");
    this.check(x, y);
    this.pressed = true;
    this.push("press", button, x, y);
  }

  move(x: number, y: number): void {
    // hover moves are legal in a trace; the engine ignores them
    this.check(x, y);
    this.push("move", null, x, y);
  }

  release(x: number, y: number): void {
    if (!this.pressed) throw new ProtocolError("release without press");
    this.check(x, y);
    this.pressed = false;
    this.push("release", null, x, y);
  }

  reset(): void {
    this.events = [];
    this.pressed = false;
  }

  exportTrace(): string {
    return this.events
      .map((e) => `${e.seq} ${e.kind} ${e.button ?? "-"} ${e.x} ${e.y}`)
      .join("\n") + (this.events.length ? "\n" : "");
  }

  private push(kind: EventKind, button: Button | null, x: number, y: number) {
    this.events.push({ seq: this.events.length + 1, kind, button, x, y });
  }

  private check(x: number, y: number) {
    if (!Number.isFinite(x) || !Number.isFinite(y)) {
      throw new ProtocolError(`non-finite coordinate (${x}, ${y})`);
    }
  }
}
