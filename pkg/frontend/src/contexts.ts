/** Context list panel (A). */

import type { ContextPayload } from "./types.js";

export function renderContexts(
  container: HTMLElement,
  contexts: ContextPayload[],
  focusIndex: number | null,
  onSelect: (num: number) => void,
): void {
  container.textContent = "";
  const doc = container.ownerDocument;
  contexts.forEach((context, index) => {
    const item = doc.createElement("button");
    item.type = "button";
    item.className = "context-item";
    if (focusIndex === index) {
      item.classList.add("focused");
    }
    item.dataset.contextNum = String(context.num);
    item.textContent = `${context.name} (${context.declaredCount})`;
    item.addEventListener("click", () => onSelect(context.num));
    container.appendChild(item);
  });
}
