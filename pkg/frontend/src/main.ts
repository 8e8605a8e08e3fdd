/** Browser bootstrap: find the panel elements and start a session. */

import { ApiClient } from "./api.js";
import { App, type AppDom } from "./app.js";

function mustFind<T extends Element>(selector: string): T {
  const element = document.querySelector<T>(selector);
  if (!element) {
    throw new Error(`missing element ${selector}`);
  }
  return element;
}

export function bootstrap(baseUrl = ""): App {
  const dom: AppDom = {
    contextsPanel: mustFind<HTMLElement>("#contexts-panel"),
    cloudPanel: mustFind<HTMLElement>("#cloud-panel"),
    gridPanel: mustFind<HTMLElement>("#grid-panel"),
    mapSvg: mustFind<SVGSVGElement>("#map-svg"),
    similarPanel: mustFind<HTMLElement>("#similar-panel"),
    gesturePanel: mustFind<HTMLElement>("#gesture-panel"),
    voicePanel: mustFind<HTMLElement>("#voice-panel"),
    statusLine: mustFind<HTMLElement>("#status-line"),
    backButton: mustFind<HTMLButtonElement>("#back-button"),
    queryInput: mustFind<HTMLInputElement>("#query-input"),
    queryButton: mustFind<HTMLButtonElement>("#query-button"),
    queryResults: mustFind<HTMLElement>("#query-results"),
  };
  const app = new App(new ApiClient(baseUrl, (url, init) => fetch(url, init)), dom);
  void app.start();
  return app;
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
  bootstrap();
} else if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", () => bootstrap());
}
