/** 2D similarity map (panel C, bottom), drawn as SVG circles.
 *
 * Coordinates are normalized into the viewBox with a fixed margin; a
 * single point lands in the center. Hover shows the video title, click
 * hands the video id back to the app so the grid can focus it.
 */

import type { MapPayload } from "./types.js";

const VIEW = 100;
const MARGIN = 8;

export interface ProjectedPoint {
  videoId: string;
  cx: number;
  cy: number;
}

export function projectPoints(map: MapPayload): ProjectedPoint[] {
  if (map.points.length === 0) {
    return [];
  }
  const xs = map.points.map((p) => p.x);
  const ys = map.points.map((p) => p.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const span = Math.max(maxX - minX, maxY - minY);
  return map.points.map((point) => {
    if (span === 0) {
      return { videoId: point.videoId, cx: VIEW / 2, cy: VIEW / 2 };
    }
    const usable = VIEW - 2 * MARGIN;
    return {
      videoId: point.videoId,
      cx: MARGIN + ((point.x - minX) / span) * usable,
      cy: MARGIN + ((point.y - minY) / span) * usable,
    };
  });
}

export function renderMap(
  svg: SVGSVGElement,
  map: MapPayload,
  titles: Map<string, string>,
  onPick: (videoId: string) => void,
): void {
  const doc = svg.ownerDocument;
  svg.textContent = "";
  svg.setAttribute("viewBox", `0 0 ${VIEW} ${VIEW}`);
  for (const point of projectPoints(map)) {
    const circle = doc.createElementNS("http://www.w3.org/2000/svg", "circle");
    circle.setAttribute("cx", String(point.cx));
    circle.setAttribute("cy", String(point.cy));
    circle.setAttribute("r", "3");
    circle.setAttribute("class", "map-point");
    circle.dataset.videoId = point.videoId;
    const title = doc.createElementNS("http://www.w3.org/2000/svg", "title");
    title.textContent = titles.get(point.videoId) ?? point.videoId;
    circle.appendChild(title);
    circle.addEventListener("click", () => onPick(point.videoId));
    svg.appendChild(circle);
  }
}
