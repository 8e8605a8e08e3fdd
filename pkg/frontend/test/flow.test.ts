/** End-to-end browser flow over the documented API, driven through the DOM. */

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient, DOCUMENTED_ENDPOINTS, endpointTemplate } from "../src/api.js";
import { App } from "../src/app.js";
import { createDom } from "./domHarness.js";
import { FakeService } from "./fakeService.js";

const PANEL_RECT = { left: 0, top: 0, width: 300, height: 200 };

function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

describe("three-panel navigation flow", () => {
  let fake: FakeService;
  let app: App;
  let dom: ReturnType<typeof createDom>;
  let clock: number;

  beforeEach(async () => {
    fake = new FakeService();
    dom = createDom();
    clock = 0;
    app = new App(new ApiClient("", fake.fetch), dom, {
      rect: () => PANEL_RECT,
      now: () => (clock += 50),
    });
    await app.start();
    await flush();
  });

  function drag(points: Array<[number, number]>): void {
    const [firstX, firstY] = points[0];
    dom.gesturePanel.dispatchEvent(
      new MouseEvent("pointerdown", { clientX: firstX, clientY: firstY }),
    );
    for (const [x, y] of points.slice(1, -1)) {
      dom.gesturePanel.dispatchEvent(
        new MouseEvent("pointermove", { clientX: x, clientY: y }),
      );
    }
    const [lastX, lastY] = points[points.length - 1];
    dom.gesturePanel.dispatchEvent(
      new MouseEvent("pointerup", { clientX: lastX, clientY: lastY }),
    );
  }

  it("walks context -> cloud -> grid and keeps payload order", async () => {
    // panel A lists the three contexts
    const contextButtons = dom.contextsPanel.querySelectorAll<HTMLElement>(".context-item");
    expect(Array.from(contextButtons).map((b) => b.textContent)).toEqual([
      "Adult (6)", "Airplane (2)", "Animal (5)",
    ]);

    // selecting Animal shows the five-label cloud, sizes monotone in pertinence
    contextButtons[2].click();
    await flush();
    const labels = Array.from(
      dom.cloudPanel.querySelectorAll<HTMLElement>(".cloud-label"),
    );
    expect(labels.map((l) => l.textContent)).toEqual([
      "Birds", "Cats", "Cows", "Dogs", "Horse",
    ]);
    const size = (label: HTMLElement) => parseFloat(label.style.fontSize);
    const pertinence = [0.2916666666666667, 0.2916666666666667, 0.125, 0.15625, 0.25];
    for (let i = 0; i < labels.length; i++) {
      for (let j = 0; j < labels.length; j++) {
        if (pertinence[i] >= pertinence[j]) {
          expect(size(labels[i])).toBeGreaterThanOrEqual(size(labels[j]));
        }
      }
    }
    expect(app.state.session?.level).toBe("CONCEPTS");

    // selecting Birds renders the grid exactly in payload order
    labels[0].click();
    await flush();
    expect(app.state.session?.level).toBe("VIDEOS");
    const cards = Array.from(
      dom.gridPanel.querySelectorAll<HTMLElement>(".video-card"),
    );
    expect(cards.map((c) => c.dataset.videoId)).toEqual(
      app.state.videos.map((v) => v.videoId),
    );
    expect(cards.map((c) => c.dataset.videoId)).toEqual(["v1", "v3"]);

    // the map shows one point per ranked video
    expect(dom.mapSvg.querySelectorAll("circle")).toHaveLength(2);
  });

  it("right-drag in the gesture panel advances the focus", async () => {
    // walk to the video grid first
    dom.contextsPanel.querySelectorAll<HTMLElement>(".context-item")[2].click();
    await flush();
    dom.cloudPanel.querySelectorAll<HTMLElement>(".cloud-label")[0].click();
    await flush();
    expect(app.state.session?.focus).toBe(0);

    // a horizontal drag across the panel is a right swipe -> NEXT_ITEM
    drag([[10, 100], [150, 100], [290, 100]]);
    await flush();
    expect(app.state.session?.focus).toBe(1);
    const cards = dom.gridPanel.querySelectorAll<HTMLElement>(".video-card");
    expect(cards[1].classList.contains("focused")).toBe(true);
    expect(dom.statusLine.textContent).toContain("SWIPE_RIGHT");
  });

  it("tiny jitter posts a gesture but reports no command", async () => {
    drag([[150, 100], [152, 100], [151, 100]]);
    await flush();
    expect(dom.statusLine.textContent).toContain("no gesture");
    expect(app.state.session?.focus).toBe(0);
  });

  it("dwell selects the focused item end to end", async () => {
    // 6 samples x 50 ms = 250+ ms with negligible movement: PUSH_SELECT
    drag([[150, 100], [150, 100], [150, 100], [150, 100], [150, 100], [150, 100], [150, 100]]);
    await flush();
    expect(app.state.session?.level).toBe("CONCEPTS");
    expect(app.state.session?.selectedContext).toBe(2); // first context focused
  });

  it("voice buttons post voice tokens and update the view", async () => {
    dom.contextsPanel.querySelectorAll<HTMLElement>(".context-item")[2].click();
    await flush();
    const retour = dom.voicePanel.querySelector<HTMLElement>(
      '[data-voice-token="retour"]',
    );
    retour!.click();
    await flush();
    expect(app.state.session?.level).toBe("CONTEXTS");
    const voiceCall = fake.calls.find(
      (c) => c.path.endsWith("/events") && (c.body as { voice?: string }).voice,
    );
    expect(voiceCall?.body).toEqual({ voice: "retour" });
  });

  it("feedback buttons round-trip through the service", async () => {
    dom.contextsPanel.querySelectorAll<HTMLElement>(".context-item")[2].click();
    await flush();
    dom.cloudPanel.querySelectorAll<HTMLElement>(".cloud-label")[0].click();
    await flush();
    dom.gridPanel
      .querySelector<HTMLElement>('[data-video-id="v3"] .mark-relevant')!
      .click();
    await flush();
    expect(app.state.session?.feedbackFactors).toEqual({ v3: 1.5 });
    // grid re-renders from the service's adjusted ranking, order preserved
    const cards = dom.gridPanel.querySelectorAll<HTMLElement>(".video-card");
    expect(cards.length).toBe(2);
    expect(Array.from(cards).map((c) => c.dataset.videoId)).toEqual(
      app.state.videos.map((v) => v.videoId),
    );
  });

  it("the whole flow touches only documented endpoints", async () => {
    dom.contextsPanel.querySelectorAll<HTMLElement>(".context-item")[2].click();
    await flush();
    dom.cloudPanel.querySelectorAll<HTMLElement>(".cloud-label")[0].click();
    await flush();
    drag([[10, 100], [150, 100], [290, 100]]);
    await flush();
    dom.backButton.click();
    await flush();
    for (const call of fake.calls) {
      expect(DOCUMENTED_ENDPOINTS).toContain(endpointTemplate(call.method, call.path));
    }
  });

  it("ignores a second command while one is in flight", async () => {
    const before = fake.calls.length;
    const first = app.selectContext(6);
    const second = app.selectContext(3); // dropped: one in-flight command
    await Promise.all([first, second]);
    await flush();
    const selects = fake.calls
      .slice(before)
      .filter((c) => c.path.endsWith("/select-context"));
    expect(selects).toHaveLength(1);
    expect(app.state.session?.selectedContext).toBe(6);
  });
});
