/** Accessibility input panel: records pointer traces and voice tokens.
 *
 * Pointer positions are normalized against the panel rectangle into
 * [0, 1] (y grows downward, as pointer coordinates do), timestamps are
 * milliseconds relative to the first sample. The resulting trace is the
 * exact body of a `/events` gesture post.
 */

import type { TracePointPayload } from "./types.js";

export interface RawSample {
  t: number;
  x: number;
  y: number;
}

export interface PanelRect {
  left: number;
  top: number;
  width: number;
  height: number;
}

const clamp = (value: number) => Math.min(Math.max(value, 0), 1);

export function normalizeSamples(
  samples: RawSample[],
  rect: PanelRect,
): TracePointPayload[] {
  if (samples.length === 0 || rect.width <= 0 || rect.height <= 0) {
    return [];
  }
  const start = samples[0].t;
  const trace: TracePointPayload[] = [];
  for (const sample of samples) {
    const t = sample.t - start;
    // the service wants strictly increasing timestamps
    if (trace.length > 0 && t <= trace[trace.length - 1].t) {
      continue;
    }
    trace.push({
      t,
      x: clamp((sample.x - rect.left) / rect.width),
      y: clamp((sample.y - rect.top) / rect.height),
    });
  }
  return trace;
}

export interface GesturePanelOptions {
  rect?: () => PanelRect;
  now?: () => number;
}

export class GesturePanel {
  private samples: RawSample[] = [];
  private tracking = false;
  private readonly rect: () => PanelRect;
  private readonly now: () => number;

  constructor(
    private readonly element: HTMLElement,
    private readonly onTrace: (trace: TracePointPayload[]) => void,
    options: GesturePanelOptions = {},
  ) {
    this.rect = options.rect ?? (() => this.element.getBoundingClientRect());
    this.now = options.now ?? (() => performance.now());
  }

  attach(): void {
    this.element.addEventListener("pointerdown", this.onDown as EventListener);
    this.element.addEventListener("pointermove", this.onMove as EventListener);
    this.element.addEventListener("pointerup", this.onUp as EventListener);
  }

  private onDown = (event: MouseEvent): void => {
    this.tracking = true;
    this.samples = [{ t: this.now(), x: event.clientX, y: event.clientY }];
  };

  private onMove = (event: MouseEvent): void => {
    if (!this.tracking) {
      return;
    }
    this.samples.push({ t: this.now(), x: event.clientX, y: event.clientY });
  };

  private onUp = (event: MouseEvent): void => {
    if (!this.tracking) {
      return;
    }
    this.tracking = false;
    this.samples.push({ t: this.now(), x: event.clientX, y: event.clientY });
    const trace = normalizeSamples(this.samples, this.rect());
    this.samples = [];
    if (trace.length >= 2) {
      this.onTrace(trace);
    }
  };
}

export const VOICE_TOKENS = [
  "suivant",
  "précédent",
  "retour",
  "choisir",
  "pertinent",
] as const;

export function renderVoiceButtons(
  container: HTMLElement,
  onVoice: (token: string) => void,
): void {
  container.textContent = "";
  const doc = container.ownerDocument;
  for (const token of VOICE_TOKENS) {
    const button = doc.createElement("button");
    button.type = "button";
    button.className = "voice-token";
    button.dataset.voiceToken = token;
    button.textContent = token;
    button.addEventListener("click", () => onVoice(token));
    container.appendChild(button);
  }
}
