/** Ranked video grid (panel C, top): order is exactly the payload order. */

import type { VideoRowPayload } from "./types.js";

export interface GridCallbacks {
  onMarkRelevant: (videoId: string) => void;
  onMarkNonRelevant: (videoId: string) => void;
}

export function renderGrid(
  container: HTMLElement,
  videos: VideoRowPayload[],
  focusIndex: number | null,
  callbacks: GridCallbacks,
): void {
  container.textContent = "";
  const doc = container.ownerDocument;
  if (videos.length === 0) {
    const placeholder = doc.createElement("p");
    placeholder.className = "grid-empty";
    placeholder.textContent = "No videos ranked for this concept.";
    container.appendChild(placeholder);
    return;
  }
  videos.forEach((video, index) => {
    const card = doc.createElement("div");
    card.className = "video-card";
    if (focusIndex === index) {
      card.classList.add("focused");
    }
    card.dataset.videoId = video.videoId;

    const heading = doc.createElement("h3");
    heading.textContent = `#${video.rank} ${video.title}`;
    card.appendChild(heading);

    const weight = doc.createElement("p");
    weight.className = "video-weight";
    weight.textContent = `weight ${video.weight}`;
    card.appendChild(weight);

    const relevant = doc.createElement("button");
    relevant.type = "button";
    relevant.className = "mark-relevant";
    relevant.textContent = "Relevant";
    relevant.addEventListener("click", () => callbacks.onMarkRelevant(video.videoId));
    card.appendChild(relevant);

    const nonRelevant = doc.createElement("button");
    nonRelevant.type = "button";
    nonRelevant.className = "mark-nonrelevant";
    nonRelevant.textContent = "Not relevant";
    nonRelevant.addEventListener("click", () =>
      callbacks.onMarkNonRelevant(video.videoId),
    );
    card.appendChild(nonRelevant);

    container.appendChild(card);
  });
}
