/** Builds the panel skeleton the App expects, inside the jsdom document. */

import type { AppDom } from "../src/app.js";

export function createDom(): AppDom {
  document.body.innerHTML = `
    <div id="contexts-panel"></div>
    <div id="cloud-panel"></div>
    <div id="grid-panel"></div>
    <svg id="map-svg" xmlns="http://www.w3.org/2000/svg"></svg>
    <div id="similar-panel"></div>
    <div id="gesture-panel"></div>
    <div id="voice-panel"></div>
    <div id="status-line"></div>
    <button id="back-button" type="button"></button>
    <input id="query-input" />
    <button id="query-button" type="button"></button>
    <ul id="query-results"></ul>
  `;
  const find = <T extends Element>(selector: string): T =>
    document.querySelector(selector) as T;
  return {
    contextsPanel: find<HTMLElement>("#contexts-panel"),
    cloudPanel: find<HTMLElement>("#cloud-panel"),
    gridPanel: find<HTMLElement>("#grid-panel"),
    mapSvg: find<SVGSVGElement>("#map-svg"),
    similarPanel: find<HTMLElement>("#similar-panel"),
    gesturePanel: find<HTMLElement>("#gesture-panel"),
    voicePanel: find<HTMLElement>("#voice-panel"),
    statusLine: find<HTMLElement>("#status-line"),
    backButton: find<HTMLButtonElement>("#back-button"),
    queryInput: find<HTMLInputElement>("#query-input"),
    queryButton: find<HTMLButtonElement>("#query-button"),
    queryResults: find<HTMLElement>("#query-results"),
  };
}
