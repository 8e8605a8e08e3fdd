/** Wire types of the session service. The client renders these verbatim. */

export type Level = "CONTEXTS" | "CONCEPTS" | "VIDEOS";

export interface ContextMemberPayload {
  conceptId: number;
  conceptName: string;
  weight: number;
}

export interface ContextPayload {
  num: number;
  name: string;
  declaredCount: number;
  members: ContextMemberPayload[];
}

export interface CloudEntryPayload {
  conceptId: number;
  name: string;
  pertinence: number;
  fontSize: number;
}

export interface VideoRowPayload {
  rank: number;
  videoId: string;
  title: string;
  weight: number;
}

export interface SimilarConceptPayload {
  conceptId: number;
  name: string;
  similarity: number;
}

export interface SessionPayload {
  id: string;
  level: Level;
  selectedContext: number | null;
  selectedConcept: number | null;
  focus: number;
  focusedItem: number | string | null;
  historyDepth: number;
  feedbackFactors: Record<string, number>;
}

export interface MapPointPayload {
  videoId: string;
  x: number;
  y: number;
}

export interface MapPayload {
  points: MapPointPayload[];
  stress: number;
}

export interface TracePointPayload {
  t: number;
  x: number;
  y: number;
}

export interface EventResultPayload {
  event: "gesture" | "voice";
  token: string;
  action: string | null;
  outcome: string;
  session: SessionPayload;
}

export interface QueryHitPayload {
  conceptId: number;
  name: string;
  pertinence: number;
}
