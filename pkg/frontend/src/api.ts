/** Typed client over the documented service endpoints — and nothing else. */

import type {
  CloudEntryPayload,
  ContextPayload,
  EventResultPayload,
  MapPayload,
  QueryHitPayload,
  SessionPayload,
  SimilarConceptPayload,
  TracePointPayload,
  VideoRowPayload,
} from "./types.js";

export const DOCUMENTED_ENDPOINTS: readonly string[] = [
  "GET /health",
  "GET /contexts",
  "POST /sessions",
  "GET /sessions/{id}",
  "POST /sessions/{id}/select-context",
  "POST /sessions/{id}/select-concept",
  "GET /sessions/{id}/cloud",
  "GET /sessions/{id}/videos",
  "GET /sessions/{id}/map",
  "POST /sessions/{id}/feedback",
  "POST /sessions/{id}/back",
  "POST /sessions/{id}/events",
  "GET /sessions/{id}/query",
];

/** Collapse a concrete request path onto its documented template. */
export function endpointTemplate(method: string, path: string): string {
  const bare = path.split("?")[0];
  const template = bare.replace(/^\/sessions\/[^/]+/, "/sessions/{id}");
  return `${method.toUpperCase()} ${template}`;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(public readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: {} };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    const payload = await response.json().catch(() => ({}));
    if (!response.ok) {
      const detail =
        typeof payload === "object" && payload !== null && "error" in payload
          ? String((payload as { error: unknown }).error)
          : `request failed with status ${response.status}`;
      throw new ApiError(response.status, detail);
    }
    return payload as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("GET", "/health");
  }

  contexts(): Promise<{ contexts: ContextPayload[] }> {
    return this.request("GET", "/contexts");
  }

  createSession(): Promise<SessionPayload> {
    return this.request("POST", "/sessions");
  }

  getSession(id: string): Promise<SessionPayload> {
    return this.request("GET", `/sessions/${id}`);
  }

  selectContext(
    id: string,
    num: number,
  ): Promise<{ session: SessionPayload; cloud: CloudEntryPayload[] }> {
    return this.request("POST", `/sessions/${id}/select-context`, { num });
  }

  selectConcept(
    id: string,
    conceptId: number,
  ): Promise<{
    session: SessionPayload;
    videos: VideoRowPayload[];
    similar: SimilarConceptPayload[];
  }> {
    return this.request("POST", `/sessions/${id}/select-concept`, { id: conceptId });
  }

  cloud(id: string): Promise<{ cloud: CloudEntryPayload[] }> {
    return this.request("GET", `/sessions/${id}/cloud`);
  }

  videos(id: string): Promise<{ videos: VideoRowPayload[] }> {
    return this.request("GET", `/sessions/${id}/videos`);
  }

  map(id: string): Promise<MapPayload> {
    return this.request("GET", `/sessions/${id}/map`);
  }

  feedback(
    id: string,
    relevant: string[],
    nonRelevant: string[],
  ): Promise<{ session: SessionPayload; videos: VideoRowPayload[] }> {
    return this.request("POST", `/sessions/${id}/feedback`, {
      relevant,
      nonRelevant,
    });
  }

  back(id: string): Promise<{ session: SessionPayload }> {
    return this.request("POST", `/sessions/${id}/back`);
  }

  sendGesture(id: string, trace: TracePointPayload[]): Promise<EventResultPayload> {
    return this.request("POST", `/sessions/${id}/events`, { gesture: trace });
  }

  sendVoice(id: string, token: string): Promise<EventResultPayload> {
    return this.request("POST", `/sessions/${id}/events`, { voice: token });
  }

  query(id: string, text: string): Promise<{ concepts: QueryHitPayload[] }> {
    return this.request(
      "GET",
      `/sessions/${id}/query?text=${encodeURIComponent(text)}`,
    );
  }
}
