import { beforeEach, describe, expect, it, vi } from "vitest";

import { renderPairBrowser } from "../src/pairs.js";
import { pairsFixture, panel } from "./helpers.js";

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("pair browser", () => {
  it("lists one row per stored pair", () => {
    const container = panel();
    renderPairBrowser(container, pairsFixture(), null, () => {});
    const rows = container.querySelectorAll("li.pair");
    expect(rows.length).toBe(3);
    expect(container.textContent).toContain("Codex Aureus of St. Emmeram");
    expect(container.textContent).toContain("8 snapshots");
  });

  it("empty store shows the empty state", () => {
    const container = panel();
    renderPairBrowser(container, [], null, () => {});
    expect(container.querySelector(".empty-state")).not.toBeNull();
    expect(container.querySelectorAll("li.pair").length).toBe(0);
  });

  it("clicking a row selects its pair id", () => {
    const container = panel();
    const onSelect = vi.fn();
    renderPairBrowser(container, pairsFixture(), null, onSelect);
    const row = container.querySelector(
      "li[data-pair-id='codex-aureus-of-st-emmeram.de-en']") as HTMLElement;
    row.click();
    expect(onSelect).toHaveBeenCalledWith("codex-aureus-of-st-emmeram.de-en");
  });

  it("marks the selected pair", () => {
    const container = panel();
    renderPairBrowser(container, pairsFixture(), "der-stern-von-afrika.de-en", () => {});
    const selected = container.querySelector("li.pair.selected") as HTMLElement;
    expect(selected.dataset.pairId).toBe("der-stern-von-afrika.de-en");
  });
});
