/** Pair browser: one row per stored article pair. */

import { el } from "./format.js";
import type { PairInfo } from "./types.js";

export function renderPairBrowser(container: HTMLElement, pairs: PairInfo[],
                                  selectedId: string | null,
                                  onSelect: (pairId: string) => void): void {
  container.replaceChildren();
  if (pairs.length === 0) {
    container.appendChild(el("p", "empty-state",
                             "No article pairs in the store yet."));
    return;
  }
  const list = el("ul", "pair-list");
  for (const pair of pairs) {
    const item = el("li", pair.pair_id === selectedId ? "pair selected" : "pair");
    item.dataset.pairId = pair.pair_id;
    item.appendChild(el("span", "pair-title", pair.canonical_id));
    item.appendChild(el("span", "pair-langs", pair.langs.join(" / ")));
    item.appendChild(el("span", "pair-count", `${pair.snapshot_count} snapshots`));
    item.addEventListener("click", () => onSelect(pair.pair_id));
    list.appendChild(item);
  }
  container.appendChild(list);
}
