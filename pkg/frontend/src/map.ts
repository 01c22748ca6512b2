/** Schematic world map: one tile per country, log-scale color by editor count. */

import { el, svgEl } from "./format.js";

// Rough tile-grid positions (column, row) on a 24x11 world layout.
const COUNTRY_TILES: Record<string, [number, number]> = {
  CA: [3, 1], US: [3, 3], MX: [3, 4], CU: [4, 4], GT: [3, 5],
  CO: [5, 6], VE: [6, 6], PE: [5, 7], BR: [7, 7], BO: [6, 7],
  CL: [5, 9], AR: [6, 9], UY: [7, 9],
  IS: [9, 0], IE: [9, 2], GB: [10, 2], PT: [9, 4], ES: [10, 4],
  FR: [10, 3], BE: [11, 2], NL: [11, 1], LU: [11, 3], CH: [11, 4],
  DE: [12, 2], DK: [12, 1], NO: [12, 0], SE: [13, 0], FI: [14, 0],
  IT: [12, 4], AT: [12, 3], CZ: [13, 2], PL: [13, 1], HU: [13, 3],
  GR: [13, 4], RO: [14, 3], BG: [14, 4], UA: [15, 2], TR: [14, 5],
  RU: [16, 1], EG: [13, 6], MA: [10, 5], DZ: [11, 6], TN: [12, 5],
  NG: [12, 7], GH: [11, 7], KE: [14, 7], ET: [14, 6], ZA: [13, 9],
  SA: [15, 5], IL: [14, 4], IR: [16, 4], IQ: [15, 4], AE: [16, 5],
  IN: [17, 5], PK: [16, 3], BD: [18, 5], LK: [17, 7], CN: [18, 3],
  JP: [20, 3], KR: [19, 3], TH: [18, 6], VN: [19, 6], MY: [18, 7],
  SG: [18, 8], ID: [19, 8], PH: [20, 6], AU: [20, 9], NZ: [22, 10],
};

const TILE = 26;
const GAP = 3;

function fillFor(count: number, max: number): string {
  // log scale keeps single-editor countries visible next to heavy ones
  const t = Math.log1p(count) / Math.log1p(Math.max(max, 1));
  const light = 92 - Math.round(t * 52);
  return `hsl(210 65% ${light}%)`;
}

export function renderCountryMap(container: HTMLElement, title: string,
                                 counts: Record<string, number>): void {
  const panel = el("figure", "country-map");
  panel.appendChild(el("figcaption", "", title));
  const entries = Object.entries(counts);
  if (entries.length === 0) {
    panel.appendChild(el("p", "empty-state", "No located editors."));
    container.appendChild(panel);
    return;
  }
  const max = Math.max(...entries.map(([, count]) => count));
  const svg = svgEl("svg", {
    viewBox: `0 0 ${24 * (TILE + GAP)} ${12 * (TILE + GAP)}`,
    class: "map-grid",
    role: "img",
  });
  for (const [code, [col, row]] of Object.entries(COUNTRY_TILES)) {
    svg.appendChild(svgEl("rect", {
      class: "map-tile",
      x: col * (TILE + GAP),
      y: row * (TILE + GAP),
      width: TILE,
      height: TILE,
      fill: code in counts ? fillFor(counts[code] ?? 0, max) : "hsl(210 10% 94%)",
      "data-country": code,
    }));
  }
  let overflowColumn = 0;
  for (const [code, count] of entries) {
    const tile = COUNTRY_TILES[code];
    const [col, row] = tile ?? [overflowColumn++, 11];
    const label = svgEl("text", {
      class: "map-tile-label",
      x: col * (TILE + GAP) + TILE / 2,
      y: row * (TILE + GAP) + TILE / 2 + 4,
      "text-anchor": "middle",
      "data-country-label": code,
    });
    label.textContent = `${code} ${count}`;
    if (!tile) {
      svg.appendChild(svgEl("rect", {
        class: "map-tile",
        x: col * (TILE + GAP),
        y: row * (TILE + GAP),
        width: TILE,
        height: TILE,
        fill: fillFor(count, max),
        "data-country": code,
      }));
    }
    svg.appendChild(label);
  }
  panel.appendChild(svg);
  container.appendChild(panel);
}
