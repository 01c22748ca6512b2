/** UI acceptance: full click-through against fixture-store payloads. */

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { App } from "../src/main.js";
import {
  comparisonFixture,
  pairsFixture,
  panel,
  stubFetch,
  timelineFixture,
} from "./helpers.js";

const CODEX = "codex-aureus-of-st-emmeram.de-en";

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("acceptance: fixture-store click-through", () => {
  it("browse pairs, open the Codex timeline, click a marker, read the comparison", async () => {
    stubFetch({
      "/api/pairs/codex-aureus-of-st-emmeram.de-en/timeline": timelineFixture,
      "/api/pairs/codex-aureus-of-st-emmeram.de-en/comparison": comparisonFixture,
      "/api/pairs": pairsFixture,
    });
    const panels = { pairs: panel(), timeline: panel(), comparison: panel() };
    const app = new App(panels, new ApiClient(""), () => {});
    await app.start("");

    // pair browser lists the three fixture pairs
    const rows = panels.pairs.querySelectorAll("li.pair");
    expect(rows.length).toBe(3);

    // selecting the Codex-shaped pair renders one marker per stored point
    const codexRow = panels.pairs.querySelector(
      `li[data-pair-id='${CODEX}']`) as HTMLElement;
    codexRow.click();
    await Promise.resolve();
    await new Promise((resolve) => setTimeout(resolve, 0));
    const markers = panels.timeline.querySelectorAll("circle.marker");
    expect(markers.length).toBe(timelineFixture().points.length);

    // clicking the peak marker renders the comparison for that time
    const peak = timelineFixture().points
      .reduce((a, b) => (b.sim > a.sim ? b : a));
    const marker = panels.timeline.querySelector(
      `circle.marker[data-time='${peak.time}']`) as SVGCircleElement;
    marker.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await new Promise((resolve) => setTimeout(resolve, 0));

    const doc = comparisonFixture();
    const connectors = panels.comparison.querySelectorAll("path.connector");
    expect(connectors.length).toBe(doc.passage_pairs.length);

    const coverage = panels.comparison.querySelector(
      "[data-role='coverage']") as HTMLElement;
    const payload = doc.feature_scores.find(
      (score) => score.feature === "passage_coverage")!;
    expect(coverage.textContent).toBe(payload.value.toFixed(2));
  });
});
