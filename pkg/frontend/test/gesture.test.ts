import { describe, expect, it, vi } from "vitest";

import { GesturePanel, normalizeSamples } from "../src/gesture.js";

const RECT = { left: 100, top: 50, width: 300, height: 200 };

describe("normalizeSamples", () => {
  it("maps panel coordinates into [0, 1] with relative timestamps", () => {
    const trace = normalizeSamples(
      [
        { t: 1000, x: 100, y: 50 },
        { t: 1200, x: 250, y: 150 },
        { t: 1400, x: 400, y: 250 },
      ],
      RECT,
    );
    expect(trace).toEqual([
      { t: 0, x: 0, y: 0 },
      { t: 200, x: 0.5, y: 0.5 },
      { t: 400, x: 1, y: 1 },
    ]);
  });

  it("clamps positions outside the panel", () => {
    const trace = normalizeSamples(
      [
        { t: 0, x: 0, y: 0 },
        { t: 100, x: 1000, y: 1000 },
      ],
      RECT,
    );
    expect(trace[0]).toEqual({ t: 0, x: 0, y: 0 });
    expect(trace[1]).toEqual({ t: 100, x: 1, y: 1 });
  });

  it("drops samples that would repeat a timestamp", () => {
    const trace = normalizeSamples(
      [
        { t: 0, x: 100, y: 50 },
        { t: 0, x: 130, y: 50 },
        { t: 50, x: 160, y: 50 },
      ],
      RECT,
    );
    expect(trace.map((p) => p.t)).toEqual([0, 50]);
  });

  it("yields nothing for a degenerate rectangle", () => {
    expect(
      normalizeSamples([{ t: 0, x: 1, y: 1 }], { left: 0, top: 0, width: 0, height: 0 }),
    ).toEqual([]);
  });
});

describe("GesturePanel", () => {
  function panelWithClock() {
    const element = document.createElement("div");
    const onTrace = vi.fn();
    let clock = 0;
    const panel = new GesturePanel(element, onTrace, {
      rect: () => RECT,
      now: () => (clock += 100),
    });
    panel.attach();
    return { element, onTrace };
  }

  function pointer(element: HTMLElement, type: string, x: number, y: number) {
    element.dispatchEvent(
      new MouseEvent(type, { clientX: x, clientY: y, bubbles: true }),
    );
  }

  it("emits a normalized trace after a drag", () => {
    const { element, onTrace } = panelWithClock();
    pointer(element, "pointerdown", 100, 150);
    pointer(element, "pointermove", 250, 150);
    pointer(element, "pointerup", 400, 150);
    expect(onTrace).toHaveBeenCalledTimes(1);
    const trace = onTrace.mock.calls[0][0];
    expect(trace).toHaveLength(3);
    expect(trace[0].x).toBe(0);
    expect(trace[2].x).toBe(1);
    expect(trace[2].t).toBeGreaterThan(trace[0].t);
  });

  it("ignores moves without a preceding pointerdown", () => {
    const { element, onTrace } = panelWithClock();
    pointer(element, "pointermove", 250, 150);
    pointer(element, "pointerup", 400, 150);
    expect(onTrace).not.toHaveBeenCalled();
  });
});
