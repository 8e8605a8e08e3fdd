import { beforeEach, describe, expect, it, vi } from "vitest";

import { renderGrid } from "../src/grid.js";
import { projectPoints, renderMap } from "../src/mapview.js";
import type { MapPayload, VideoRowPayload } from "../src/types.js";

const VIDEOS: VideoRowPayload[] = [
  { rank: 1, videoId: "v1", title: "Backyard birds", weight: 0.25 },
  { rank: 2, videoId: "v3", title: "Pets at home", weight: 0.041666666666666664 },
];

describe("renderGrid", () => {
  let container: HTMLElement;

  beforeEach(() => {
    container = document.createElement("div");
  });

  it("renders cards exactly in payload order", () => {
    renderGrid(container, VIDEOS, null, {
      onMarkRelevant: () => {},
      onMarkNonRelevant: () => {},
    });
    const ids = Array.from(
      container.querySelectorAll<HTMLElement>(".video-card"),
    ).map((card) => card.dataset.videoId);
    expect(ids).toEqual(["v1", "v3"]);
  });

  it("marks the focused card", () => {
    renderGrid(container, VIDEOS, 1, {
      onMarkRelevant: () => {},
      onMarkNonRelevant: () => {},
    });
    const cards = container.querySelectorAll<HTMLElement>(".video-card");
    expect(cards[0].classList.contains("focused")).toBe(false);
    expect(cards[1].classList.contains("focused")).toBe(true);
  });

  it("feedback buttons hand back the video id", () => {
    const onMarkRelevant = vi.fn();
    const onMarkNonRelevant = vi.fn();
    renderGrid(container, VIDEOS, null, { onMarkRelevant, onMarkNonRelevant });
    container
      .querySelector<HTMLElement>('[data-video-id="v3"] .mark-relevant')!
      .click();
    container
      .querySelector<HTMLElement>('[data-video-id="v1"] .mark-nonrelevant')!
      .click();
    expect(onMarkRelevant).toHaveBeenCalledWith("v3");
    expect(onMarkNonRelevant).toHaveBeenCalledWith("v1");
  });

  it("shows a placeholder when nothing is ranked", () => {
    renderGrid(container, [], null, {
      onMarkRelevant: () => {},
      onMarkNonRelevant: () => {},
    });
    expect(container.querySelector(".grid-empty")).not.toBeNull();
  });
});

describe("projectPoints", () => {
  it("centers a single point", () => {
    const layout: MapPayload = { points: [{ videoId: "v2", x: 3.2, y: -1.1 }], stress: 0 };
    expect(projectPoints(layout)).toEqual([{ videoId: "v2", cx: 50, cy: 50 }]);
  });

  it("keeps well-separated points apart and inside the viewBox", () => {
    const layout: MapPayload = {
      points: [
        { videoId: "a", x: -0.4, y: -0.3 },
        { videoId: "b", x: 0.4, y: 0.3 },
        { videoId: "c", x: 0.0, y: 0.0 },
      ],
      stress: 0.01,
    };
    const projected = projectPoints(layout);
    for (const point of projected) {
      expect(point.cx).toBeGreaterThanOrEqual(0);
      expect(point.cx).toBeLessThanOrEqual(100);
      expect(point.cy).toBeGreaterThanOrEqual(0);
      expect(point.cy).toBeLessThanOrEqual(100);
    }
    const [a, b] = projected;
    expect(Math.hypot(a.cx - b.cx, a.cy - b.cy)).toBeGreaterThan(10);
  });

  it("preserves relative ordering along each axis", () => {
    const layout: MapPayload = {
      points: [
        { videoId: "left", x: -1, y: 0 },
        { videoId: "right", x: 1, y: 0 },
      ],
      stress: 0,
    };
    const [left, right] = projectPoints(layout);
    expect(left.cx).toBeLessThan(right.cx);
  });
});

describe("renderMap", () => {
  it("draws a circle per point with the title as tooltip", () => {
    const svg = document.createElementNS(
      "http://www.w3.org/2000/svg",
      "svg",
    ) as SVGSVGElement;
    const layout: MapPayload = {
      points: [
        { videoId: "v1", x: -0.1, y: -0.3 },
        { videoId: "v3", x: 0.1, y: 0.3 },
      ],
      stress: 0,
    };
    const onPick = vi.fn();
    renderMap(svg, layout, new Map([["v1", "Backyard birds"]]), onPick);
    const circles = svg.querySelectorAll("circle");
    expect(circles).toHaveLength(2);
    expect(circles[0].querySelector("title")!.textContent).toBe("Backyard birds");
    expect(circles[1].querySelector("title")!.textContent).toBe("v3");
    circles[1].dispatchEvent(new MouseEvent("click"));
    expect(onPick).toHaveBeenCalledWith("v3");
  });
});
