/** Application shell: panel orchestration, URL state, fetch discipline
 * (one in-flight request per panel, latest wins). */

import { ApiClient, ApiError } from "./api.js";
import { renderComparison, renderComparisonError } from "./comparison.js";
import { el } from "./format.js";
import { renderPairBrowser } from "./pairs.js";
import { stateFromUrl, urlFromState, type UiState } from "./state.js";
import { renderTimeline } from "./timeline.js";
import type { PairInfo } from "./types.js";

interface Panels {
  pairs: HTMLElement;
  timeline: HTMLElement;
  comparison: HTMLElement;
}

export class App {
  private state: UiState = { pairId: null, time: null };
  private pairs: PairInfo[] = [];
  private pairsLoaded = false;
  private aborters: { timeline?: AbortController; comparison?: AbortController } = {};

  constructor(private panels: Panels, private api: ApiClient,
              private pushUrl: (url: string) => void = (url) =>
                history.pushState(null, "", url)) {}

  async start(initialHash: string): Promise<void> {
    await this.loadPairs();
    await this.applyState(stateFromUrl(initialHash), false);
  }

  async loadPairs(): Promise<void> {
    this.panels.pairs.replaceChildren(el("p", "loading", "Loading pairs…"));
    try {
      this.pairs = await this.api.pairs();
    } catch (error) {
      this.pairsLoaded = false;
      const banner = el("div", "error-panel");
      banner.appendChild(el("p", "", `Could not reach the API: ${String(error)}`));
      const retry = el("button", "retry", "Retry");
      retry.addEventListener("click", () => void this.loadPairs());
      banner.appendChild(retry);
      this.panels.pairs.replaceChildren(banner);
      return;
    }
    this.pairsLoaded = true;
    renderPairBrowser(this.panels.pairs, this.pairs, this.state.pairId,
                      (pairId) => void this.selectPair(pairId));
  }

  /** Restore a state (initial load or history navigation) without pushing. */
  async applyState(state: UiState, push: boolean): Promise<void> {
    this.state = state;
    if (push) {
      this.pushUrl(urlFromState(state));
    }
    if (this.pairsLoaded) {
      renderPairBrowser(this.panels.pairs, this.pairs, state.pairId,
                        (pairId) => void this.selectPair(pairId));
    }
    if (state.pairId === null) {
      this.panels.timeline.replaceChildren(
        el("p", "empty-state", "Select an article pair."));
      this.panels.comparison.replaceChildren();
      return;
    }
    await this.loadTimeline(state.pairId);
    if (state.time !== null) {
      await this.loadComparison(state.pairId, state.time);
    } else {
      this.panels.comparison.replaceChildren(
        el("p", "empty-state", "Click a timeline marker to compare snapshots."));
    }
  }

  async selectPair(pairId: string): Promise<void> {
    await this.applyState({ pairId, time: null }, true);
  }

  async selectTime(time: string): Promise<void> {
    if (this.state.pairId === null) {
      return;
    }
    await this.applyState({ pairId: this.state.pairId, time }, true);
  }

  private fresh(panel: "timeline" | "comparison"): AbortSignal {
    this.aborters[panel]?.abort();
    const controller = new AbortController();
    this.aborters[panel] = controller;
    return controller.signal;
  }

  private async loadTimeline(pairId: string): Promise<void> {
    const signal = this.fresh("timeline");
    this.panels.timeline.replaceChildren(el("p", "loading", "Loading timeline…"));
    try {
      const series = await this.api.timeline(pairId, signal);
      if (signal.aborted) {
        return;
      }
      renderTimeline(this.panels.timeline, series, this.state.time,
                     (time) => void this.selectTime(time));
    } catch (error) {
      if (!signal.aborted) {
        this.panels.timeline.replaceChildren(
          el("p", "error-panel", `Timeline unavailable: ${String(error)}`));
      }
    }
  }

  private async loadComparison(pairId: string, time: string): Promise<void> {
    const signal = this.fresh("comparison");
    this.panels.comparison.replaceChildren(el("p", "loading", "Loading comparison…"));
    try {
      const doc = await this.api.comparison(pairId, time, signal);
      if (signal.aborted) {
        return;
      }
      renderComparison(this.panels.comparison, doc);
    } catch (error) {
      if (signal.aborted) {
        return;
      }
      const message = error instanceof ApiError && error.status === 404
        ? "No report at or before the selected time."
        : `Comparison unavailable: ${String(error)}`;
      renderComparisonError(this.panels.comparison, message);
    }
  }
}

export function bootstrap(root: Document = document): App {
  const panels: Panels = {
    pairs: root.getElementById("pairs-panel") as HTMLElement,
    timeline: root.getElementById("timeline-panel") as HTMLElement,
    comparison: root.getElementById("comparison-panel") as HTMLElement,
  };
  const app = new App(panels, new ApiClient(""));
  window.addEventListener("popstate", () => {
    void app.applyState(stateFromUrl(location.hash), false);
  });
  void app.start(location.hash);
  return app;
}
