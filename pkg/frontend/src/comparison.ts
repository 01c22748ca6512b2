/** Side-by-side snapshot comparison: aligned passages with connectors, image
 * table, host ranking and editor maps. Numbers render verbatim from the
 * payload; nothing is recomputed client-side. */

import { dayOf, el, score2, svgEl } from "./format.js";
import { renderCountryMap } from "./map.js";
import type { ComparisonDocument, SentenceRange, SentenceRow } from "./types.js";

const STRIP_HEIGHT = 1000;

function coverageValue(doc: ComparisonDocument): number | null {
  const score = doc.feature_scores.find((s) => s.feature === "passage_coverage");
  return score ? score.value : null;
}

function alignedIndices(ranges: SentenceRange[]): Set<number> {
  const indices = new Set<number>();
  for (const range of ranges) {
    for (let i = range.start; i <= range.end; i++) {
      indices.add(i);
    }
  }
  return indices;
}

function sentenceColumn(rows: SentenceRow[], aligned: Set<number>,
                        side: 1 | 2): HTMLElement {
  const column = el("div", "sentence-column");
  column.dataset.side = String(side);
  for (const row of rows) {
    const sentence = el("div",
                        aligned.has(row.index) ? "sentence aligned" : "sentence",
                        row.text);
    sentence.dataset.index = String(row.index);
    column.appendChild(sentence);
  }
  if (rows.length === 0) {
    column.appendChild(el("p", "empty-state", "Empty article."));
  }
  return column;
}

function anchorY(range: SentenceRange, total: number): number {
  const mid = (range.start + range.end + 1) / 2;
  return (mid / Math.max(total, 1)) * STRIP_HEIGHT;
}

function connectorStrip(doc: ComparisonDocument): SVGSVGElement {
  const svg = svgEl("svg", {
    class: "connector-strip",
    viewBox: `0 0 100 ${STRIP_HEIGHT}`,
    preserveAspectRatio: "none",
  });
  const total1 = doc.sentences1.length;
  const total2 = doc.sentences2.length;
  for (const pair of doc.passage_pairs) {
    const y1 = anchorY(pair.range1, total1);
    const y2 = anchorY(pair.range2, total2);
    const path = svgEl("path", {
      class: "connector",
      d: `M 0 ${y1} C 50 ${y1} 50 ${y2} 100 ${y2}`,
      "data-score": pair.score,
    });
    const tooltip = svgEl("title");
    tooltip.textContent = `passage score ${score2(pair.score)}`;
    path.appendChild(tooltip);
    svg.appendChild(path);
  }
  return svg;
}

function scoreBoard(doc: ComparisonDocument): HTMLElement {
  const board = el("div", "score-board");
  const add = (label: string, value: string, role: string) => {
    const item = el("div", "score-item");
    item.appendChild(el("span", "score-label", label));
    const num = el("span", "score-value", value);
    num.dataset.role = role;
    item.appendChild(num);
    board.appendChild(item);
  };
  add("overall", score2(doc.sim), "sim");
  add("text", score2(doc.sim_text), "sim-text");
  add("meta", score2(doc.sim_meta), "sim-meta");
  const coverage = coverageValue(doc);
  if (coverage !== null) {
    add("coverage", score2(coverage), "coverage");
  }
  return board;
}

function imageTable(doc: ComparisonDocument): HTMLElement {
  const table = el("table", "image-table");
  const head = el("tr");
  head.append(el("th", "", "Image"),
              el("th", "", doc.snapshots[0].lang),
              el("th", "", doc.snapshots[1].lang));
  table.appendChild(head);
  for (const row of doc.images) {
    const tr = el("tr");
    tr.append(el("td", "", row.image),
              el("td", row.in1 ? "present" : "absent", row.in1 ? "✓" : "—"),
              el("td", row.in2 ? "present" : "absent", row.in2 ? "✓" : "—"));
    table.appendChild(tr);
  }
  if (doc.images.length === 0) {
    const tr = el("tr");
    tr.appendChild(el("td", "empty-state", "No images in either snapshot."));
    table.appendChild(tr);
  }
  return table;
}

function hostList(doc: ComparisonDocument): HTMLElement {
  const list = el("ol", "host-ranking");
  for (const entry of doc.host_ranking) {
    const item = el("li", entry.two_sided ? "host two-sided" : "host one-sided");
    item.appendChild(el("span", "host-name", entry.host));
    item.appendChild(el("span", "host-count",
                        entry.two_sided ? `×${entry.count}` : "one-sided"));
    list.appendChild(item);
  }
  if (doc.host_ranking.length === 0) {
    list.appendChild(el("li", "empty-state", "No footnote hosts."));
  }
  return list;
}

export function renderComparison(container: HTMLElement,
                                 doc: ComparisonDocument): void {
  container.replaceChildren();

  const header = el("div", "comparison-header");
  for (const snapshot of doc.snapshots) {
    header.appendChild(el(
      "h3", "snapshot-title",
      `${snapshot.lang}: ${snapshot.title} (rev ${snapshot.revision_id}, ` +
      `${dayOf(snapshot.timestamp)}, ${snapshot.char_count} chars)`));
  }
  container.appendChild(header);
  container.appendChild(scoreBoard(doc));

  const columns = el("div", "comparison-columns");
  columns.appendChild(sentenceColumn(
    doc.sentences1, alignedIndices(doc.passage_pairs.map((p) => p.range1)), 1));
  columns.appendChild(connectorStrip(doc));
  columns.appendChild(sentenceColumn(
    doc.sentences2, alignedIndices(doc.passage_pairs.map((p) => p.range2)), 2));
  container.appendChild(columns);

  const panels = el("div", "feature-panels");
  const imagesPanel = el("section", "panel");
  imagesPanel.appendChild(el("h4", "", "Images"));
  imagesPanel.appendChild(imageTable(doc));
  const hostsPanel = el("section", "panel");
  hostsPanel.appendChild(el("h4", "", "Footnote hosts"));
  hostsPanel.appendChild(hostList(doc));
  const mapsPanel = el("section", "panel maps-panel");
  mapsPanel.appendChild(el("h4", "", "Editor locations"));
  renderCountryMap(mapsPanel, doc.snapshots[0].lang, doc.editor_locations1);
  renderCountryMap(mapsPanel, doc.snapshots[1].lang, doc.editor_locations2);
  panels.append(imagesPanel, hostsPanel, mapsPanel);
  container.appendChild(panels);
}

export function renderComparisonError(container: HTMLElement, message: string): void {
  container.replaceChildren();
  const panel = el("div", "error-panel");
  panel.appendChild(el("p", "", message));
  container.appendChild(panel);
}
