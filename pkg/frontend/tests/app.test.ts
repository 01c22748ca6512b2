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

function makeApp() {
  const panels = { pairs: panel(), timeline: panel(), comparison: panel() };
  const pushed: string[] = [];
  const app = new App(panels, new ApiClient(""), (url) => pushed.push(url));
  return { app, panels, pushed };
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("application flow", () => {
  it("selecting a pair and a marker drives timeline and comparison", async () => {
    const calls = stubFetch({
      "/api/pairs/codex-aureus-of-st-emmeram.de-en/timeline": timelineFixture,
      "/api/pairs/codex-aureus-of-st-emmeram.de-en/comparison": comparisonFixture,
      "/api/pairs": pairsFixture,
    });
    const { app, panels, pushed } = makeApp();
    await app.start("");
    expect(panels.pairs.querySelectorAll("li.pair").length).toBe(3);

    await app.selectPair(CODEX);
    const series = timelineFixture();
    expect(panels.timeline.querySelectorAll("circle.marker").length)
      .toBe(series.points.length);

    const time = series.points[2]!.time;
    await app.selectTime(time);
    expect(calls.some((url) => url.includes("/comparison?time="))).toBe(true);
    expect(panels.comparison.querySelectorAll("path.connector").length)
      .toBe(comparisonFixture().passage_pairs.length);
    expect(pushed.at(-1)).toContain(encodeURIComponent(time));
  });

  it("timeline is fetched once per pair (cached)", async () => {
    const calls = stubFetch({
      "/api/pairs/codex-aureus-of-st-emmeram.de-en/timeline": timelineFixture,
      "/api/pairs": pairsFixture,
    });
    const { app } = makeApp();
    await app.start("");
    await app.selectPair(CODEX);
    await app.selectPair(CODEX);
    const timelineCalls = calls.filter((url) => url.endsWith("/timeline"));
    expect(timelineCalls.length).toBe(1);
  });

  it("restores pair and time from the URL", async () => {
    stubFetch({
      "/api/pairs/codex-aureus-of-st-emmeram.de-en/timeline": timelineFixture,
      "/api/pairs/codex-aureus-of-st-emmeram.de-en/comparison": comparisonFixture,
      "/api/pairs": pairsFixture,
    });
    const { app, panels } = makeApp();
    const time = timelineFixture().points[2]!.time;
    await app.start(`#/${encodeURIComponent(CODEX)}?time=${encodeURIComponent(time)}`);
    expect(panels.timeline.querySelectorAll("circle.marker").length)
      .toBeGreaterThan(0);
    expect(panels.comparison.querySelector("[data-role='coverage']")).not.toBeNull();
  });

  it("unreachable API shows a retry banner", async () => {
    globalThis.fetch = (async () => {
      throw new Error("connection refused");
    }) as typeof fetch;
    const { app, panels } = makeApp();
    await app.start("");
    expect(panels.pairs.querySelector(".error-panel")).not.toBeNull();
    expect(panels.pairs.querySelector("button.retry")).not.toBeNull();
  });

  it("missing report renders an error panel, not a crash", async () => {
    stubFetch({
      "/api/pairs/codex-aureus-of-st-emmeram.de-en/timeline": timelineFixture,
      "/api/pairs/codex-aureus-of-st-emmeram.de-en/comparison": () =>
        new Error("no report at or before that time"),
      "/api/pairs": pairsFixture,
    });
    const { app, panels } = makeApp();
    await app.start("");
    await app.selectPair(CODEX);
    await app.selectTime("1999-01-01T00:00:00Z");
    expect(panels.comparison.querySelector(".error-panel")).not.toBeNull();
  });

  it("issues only GET requests to documented endpoints", async () => {
    const calls = stubFetch({
      "/api/pairs/codex-aureus-of-st-emmeram.de-en/timeline": timelineFixture,
      "/api/pairs/codex-aureus-of-st-emmeram.de-en/comparison": comparisonFixture,
      "/api/pairs": pairsFixture,
    });
    const { app } = makeApp();
    await app.start("");
    await app.selectPair(CODEX);
    await app.selectTime(timelineFixture().points[0]!.time);
    for (const url of calls) {
      expect(url).toMatch(/^\/api\/pairs/);
    }
  });
});
