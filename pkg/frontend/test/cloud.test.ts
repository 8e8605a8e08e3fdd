import { beforeEach, describe, expect, it, vi } from "vitest";

import { renderCloud } from "../src/cloud.js";
import type { CloudEntryPayload } from "../src/types.js";

const ANIMAL_CLOUD: CloudEntryPayload[] = [
  { conceptId: 14, name: "Birds", pertinence: 0.2916666666666667, fontSize: 36.0 },
  { conceptId: 23, name: "Cats", pertinence: 0.2916666666666667, fontSize: 36.0 },
  { conceptId: 36, name: "Cows", pertinence: 0.125, fontSize: 12.0 },
  { conceptId: 43, name: "Dogs", pertinence: 0.15625, fontSize: 16.5 },
  { conceptId: 64, name: "Horse", pertinence: 0.25, fontSize: 29.999999999999996 },
];

describe("renderCloud", () => {
  let container: HTMLElement;

  beforeEach(() => {
    container = document.createElement("div");
  });

  it("renders one label per entry in payload order", () => {
    renderCloud(container, ANIMAL_CLOUD, () => {});
    const labels = Array.from(container.querySelectorAll(".cloud-label"));
    expect(labels.map((l) => l.textContent)).toEqual([
      "Birds", "Cats", "Cows", "Dogs", "Horse",
    ]);
  });

  it("uses the payload font size verbatim, no re-scaling", () => {
    renderCloud(container, ANIMAL_CLOUD, () => {});
    const labels = container.querySelectorAll<HTMLElement>(".cloud-label");
    ANIMAL_CLOUD.forEach((entry, index) => {
      expect(labels[index].style.fontSize).toBe(`${entry.fontSize}px`);
    });
  });

  it("keeps font sizes monotone in pertinence", () => {
    renderCloud(container, ANIMAL_CLOUD, () => {});
    const labels = Array.from(container.querySelectorAll<HTMLElement>(".cloud-label"));
    for (const a of ANIMAL_CLOUD) {
      for (const b of ANIMAL_CLOUD) {
        if (a.pertinence >= b.pertinence) {
          const sizeOf = (cid: number) =>
            parseFloat(
              labels.find((l) => l.dataset.conceptId === String(cid))!.style.fontSize,
            );
          expect(sizeOf(a.conceptId)).toBeGreaterThanOrEqual(sizeOf(b.conceptId));
        }
      }
    }
  });

  it("renders equal sizes equally", () => {
    renderCloud(container, ANIMAL_CLOUD, () => {});
    const labels = container.querySelectorAll<HTMLElement>(".cloud-label");
    expect(labels[0].style.fontSize).toBe(labels[1].style.fontSize);
  });

  it("shows a placeholder for an empty cloud", () => {
    renderCloud(container, [], () => {});
    expect(container.querySelector(".cloud-empty")).not.toBeNull();
    expect(container.querySelectorAll(".cloud-label")).toHaveLength(0);
  });

  it("clicking a label selects its concept id", () => {
    const onSelect = vi.fn();
    renderCloud(container, ANIMAL_CLOUD, onSelect);
    const birds = container.querySelector<HTMLElement>('[data-concept-id="14"]');
    birds!.click();
    expect(onSelect).toHaveBeenCalledWith(14);
  });
});
