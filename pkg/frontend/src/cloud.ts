/** Tag cloud panel (B): concepts at the exact font size the service sent. */

import type { CloudEntryPayload } from "./types.js";

export function renderCloud(
  container: HTMLElement,
  entries: CloudEntryPayload[],
  onSelect: (conceptId: number) => void,
): void {
  container.textContent = "";
  if (entries.length === 0) {
    const placeholder = container.ownerDocument.createElement("p");
    placeholder.className = "cloud-empty";
    placeholder.textContent = "No concepts in this context.";
    container.appendChild(placeholder);
    return;
  }
  for (const entry of entries) {
    const label = container.ownerDocument.createElement("button");
    label.className = "cloud-label";
    label.type = "button";
    label.dataset.conceptId = String(entry.conceptId);
    // no client-side re-scaling: the payload value is the style value
    label.style.fontSize = `${entry.fontSize}px`;
    label.title = `pertinence ${entry.pertinence}`;
    label.textContent = entry.name;
    label.addEventListener("click", () => onSelect(entry.conceptId));
    container.appendChild(label);
  }
}
