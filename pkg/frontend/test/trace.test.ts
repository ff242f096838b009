import { describe, expect, it } from "vitest";

import { ProtocolError, SessionRecorder } from "../src/trace.js";
import { demoDocument, replayCli } from "./util.js";

describe("session recorder", () => {
  it("numbers events from 1 and formats one line per event", () => {
    const rec = new SessionRecorder();
    rec.press(10, 20, "primary");
    rec.move(15.5, 20);
    rec.release(15.5, 20);
    expect(rec.exportTrace()).toBe(
      "1 press primary 10 20\n2 move - 15.5 20\n3 release - 15.5 20\n",
    );
  });

  it("rejects out-of-order press and release", () => {
    const rec = new SessionRecorder();
    expect(() => rec.release(0, 0)).toThrow(ProtocolError);
    rec.press(0, 0, "secondary");
    expect(() => rec.press(1, 1, "primary")).toThrow(ProtocolError);
  });

  it("allows hover moves while idle", () => {
    const rec = new SessionRecorder();
    rec.move(5, 5);
    rec.press(6, 6, "primary");
    rec.release(7, 7);
    expect(rec.length).toBe(3);
  });

  it("rejects non-finite coordinates", () => {
    const rec = new SessionRecorder();
    expect(() => rec.move(Number.NaN, 0)).toThrow(ProtocolError);
    expect(() => rec.press(0, Infinity, "primary")).toThrow(ProtocolError);
  });

  it("produces traces the engine accepts", () => {
    const rec = new SessionRecorder();
    rec.move(200, 200);
    rec.press(380, 60, "primary");
    rec.move(390.25, 55.5);
    rec.release(390.25, 55.5);
    const after = replayCli(demoDocument(), rec.exportTrace());
    expect(after).toContain("movables-layout 1");
  });

  it("resets cleanly", () => {
    const rec = new SessionRecorder();
    rec.press(1, 2, "primary");
    rec.reset();
    expect(rec.length).toBe(0);
    expect(rec.isPressed).toBe(false);
    expect(rec.exportTrace()).toBe("");
  });
});
