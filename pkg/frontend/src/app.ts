/** Application wiring: one session per tab, one in-flight command.
 *
 * The client holds no ranking or sizing logic; after every round trip it
 * re-renders from the session state and payloads the service returned.
 */

import { ApiClient, ApiError } from "./api.js";
import { renderCloud } from "./cloud.js";
import { renderContexts } from "./contexts.js";
import { GesturePanel, renderVoiceButtons, type GesturePanelOptions } from "./gesture.js";
import { renderGrid } from "./grid.js";
import { renderMap } from "./mapview.js";
import type {
  CloudEntryPayload,
  ContextPayload,
  MapPayload,
  SessionPayload,
  SimilarConceptPayload,
  TracePointPayload,
  VideoRowPayload,
} from "./types.js";

export interface ViewState {
  session: SessionPayload | null;
  contexts: ContextPayload[];
  cloud: CloudEntryPayload[];
  videos: VideoRowPayload[];
  similar: SimilarConceptPayload[];
  map: MapPayload | null;
  lastOutcome: string;
}

export interface AppDom {
  contextsPanel: HTMLElement;
  cloudPanel: HTMLElement;
  gridPanel: HTMLElement;
  mapSvg: SVGSVGElement;
  similarPanel: HTMLElement;
  gesturePanel: HTMLElement;
  voicePanel: HTMLElement;
  statusLine: HTMLElement;
  backButton: HTMLButtonElement;
  queryInput: HTMLInputElement;
  queryButton: HTMLButtonElement;
  queryResults: HTMLElement;
}

export class App {
  readonly state: ViewState = {
    session: null,
    contexts: [],
    cloud: [],
    videos: [],
    similar: [],
    map: null,
    lastOutcome: "",
  };

  private busy = false;

  constructor(
    private readonly api: ApiClient,
    private readonly dom: AppDom,
    gestureOptions: GesturePanelOptions = {},
  ) {
    new GesturePanel(dom.gesturePanel, (trace) => void this.gesture(trace), gestureOptions).attach();
    renderVoiceButtons(dom.voicePanel, (token) => void this.voice(token));
    dom.backButton.addEventListener("click", () => void this.back());
    dom.queryButton.addEventListener("click", () => void this.runQuery());
  }

  get inFlight(): boolean {
    return this.busy;
  }

  async start(): Promise<void> {
    await this.command(async () => {
      const [contexts, session] = await Promise.all([
        this.api.contexts(),
        this.api.createSession(),
      ]);
      this.state.contexts = contexts.contexts;
      this.state.session = session;
      this.state.lastOutcome = "session started";
    });
  }

  async selectContext(num: number): Promise<void> {
    await this.command(async () => {
      const result = await this.api.selectContext(this.sessionId(), num);
      this.state.session = result.session;
      this.state.cloud = result.cloud;
      this.state.videos = [];
      this.state.similar = [];
      this.state.map = null;
      this.state.lastOutcome = `context ${num} selected`;
    });
  }

  async selectConcept(conceptId: number): Promise<void> {
    await this.command(async () => {
      const result = await this.api.selectConcept(this.sessionId(), conceptId);
      this.state.session = result.session;
      this.state.videos = result.videos;
      this.state.similar = result.similar;
      this.state.map = await this.fetchMapIfRanked();
      this.state.lastOutcome = `concept ${conceptId} selected`;
    });
  }

  async back(): Promise<void> {
    await this.command(async () => {
      const result = await this.api.back(this.sessionId());
      this.state.session = result.session;
      await this.refreshLevelViews();
      this.state.lastOutcome = "went back";
    });
  }

  async feedback(videoId: string, relevant: boolean): Promise<void> {
    await this.command(async () => {
      const result = await this.api.feedback(
        this.sessionId(),
        relevant ? [videoId] : [],
        relevant ? [] : [videoId],
      );
      this.state.session = result.session;
      this.state.videos = result.videos;
      this.state.map = await this.fetchMapIfRanked();
      this.state.lastOutcome = `${videoId} marked ${relevant ? "relevant" : "not relevant"}`;
    });
  }

  async gesture(trace: TracePointPayload[]): Promise<void> {
    await this.command(async () => {
      const result = await this.api.sendGesture(this.sessionId(), trace);
      this.state.session = result.session;
      await this.refreshLevelViews();
      this.state.lastOutcome =
        result.action === null ? "no gesture" : `${result.token}: ${result.outcome}`;
    });
  }

  async voice(token: string): Promise<void> {
    await this.command(async () => {
      const result = await this.api.sendVoice(this.sessionId(), token);
      this.state.session = result.session;
      await this.refreshLevelViews();
      this.state.lastOutcome =
        result.action === null ? `"${token}" not bound` : `${token}: ${result.outcome}`;
    });
  }

  async runQuery(): Promise<void> {
    await this.command(async () => {
      const text = this.dom.queryInput.value.trim();
      if (!text) {
        this.state.lastOutcome = "type something to search";
        return;
      }
      const result = await this.api.query(this.sessionId(), text);
      this.dom.queryResults.textContent = "";
      const doc = this.dom.queryResults.ownerDocument;
      for (const hit of result.concepts) {
        const item = doc.createElement("li");
        item.textContent = `${hit.name} (${hit.conceptId})`;
        this.dom.queryResults.appendChild(item);
      }
      this.state.lastOutcome = `${result.concepts.length} concept(s) match`;
    });
  }

  /** Re-fetch the level-dependent views after a state change. */
  private async refreshLevelViews(): Promise<void> {
    const session = this.state.session;
    if (!session) {
      return;
    }
    if (session.level === "CONTEXTS") {
      this.state.cloud = [];
      this.state.videos = [];
      this.state.similar = [];
      this.state.map = null;
      return;
    }
    const cloud = await this.api.cloud(session.id);
    this.state.cloud = cloud.cloud;
    if (session.level === "VIDEOS") {
      const videos = await this.api.videos(session.id);
      this.state.videos = videos.videos;
      this.state.map = await this.fetchMapIfRanked();
    } else {
      this.state.videos = [];
      this.state.similar = [];
      this.state.map = null;
    }
  }

  private async fetchMapIfRanked(): Promise<MapPayload | null> {
    if (this.state.videos.length === 0) {
      return null;
    }
    return this.api.map(this.sessionId());
  }

  private sessionId(): string {
    if (!this.state.session) {
      throw new Error("no session yet");
    }
    return this.state.session.id;
  }

  /** Serialize commands: at most one request cycle in flight. */
  private async command(action: () => Promise<void>): Promise<void> {
    if (this.busy) {
      return;
    }
    this.busy = true;
    this.setControlsDisabled(true);
    try {
      await action();
    } catch (error) {
      this.state.lastOutcome =
        error instanceof ApiError ? `error: ${error.message}` : `error: ${String(error)}`;
    } finally {
      this.busy = false;
      this.setControlsDisabled(false);
      this.render();
    }
  }

  private setControlsDisabled(disabled: boolean): void {
    const doc = this.dom.contextsPanel.ownerDocument;
    for (const button of Array.from(doc.querySelectorAll("button"))) {
      (button as HTMLButtonElement).disabled = disabled;
    }
  }

  render(): void {
    const session = this.state.session;
    const level = session?.level ?? "CONTEXTS";
    const focus = session?.focus ?? null;

    renderContexts(
      this.dom.contextsPanel,
      this.state.contexts,
      level === "CONTEXTS" ? focus : null,
      (num) => void this.selectContext(num),
    );
    renderCloud(this.dom.cloudPanel, level === "CONTEXTS" ? [] : this.state.cloud, (cid) =>
      void this.selectConcept(cid),
    );
    renderGrid(
      this.dom.gridPanel,
      level === "VIDEOS" ? this.state.videos : [],
      level === "VIDEOS" ? focus : null,
      {
        onMarkRelevant: (vid) => void this.feedback(vid, true),
        onMarkNonRelevant: (vid) => void this.feedback(vid, false),
      },
    );
    const titles = new Map(this.state.videos.map((v) => [v.videoId, v.title]));
    renderMap(
      this.dom.mapSvg,
      level === "VIDEOS" && this.state.map ? this.state.map : { points: [], stress: 0 },
      titles,
      (videoId) => this.focusVideo(videoId),
    );
    this.renderSimilar(level);
    this.dom.statusLine.textContent = `${level} — ${this.state.lastOutcome}`;
  }

  private renderSimilar(level: string): void {
    this.dom.similarPanel.textContent = "";
    if (level !== "VIDEOS") {
      return;
    }
    const doc = this.dom.similarPanel.ownerDocument;
    for (const concept of this.state.similar) {
      const chip = doc.createElement("button");
      chip.type = "button";
      chip.className = "similar-chip";
      chip.dataset.conceptId = String(concept.conceptId);
      chip.textContent = concept.name;
      chip.addEventListener("click", () => void this.selectConcept(concept.conceptId));
      this.dom.similarPanel.appendChild(chip);
    }
  }

  private focusVideo(videoId: string): void {
    const cards = this.dom.gridPanel.querySelectorAll<HTMLElement>(".video-card");
    cards.forEach((card) => {
      card.classList.toggle("focused", card.dataset.videoId === videoId);
    });
  }
}
