/** Similarity-and-edits timeline: one clickable marker per snapshot pair. */

import { dayOf, el, score2, svgEl } from "./format.js";
import type { TimelineSeries } from "./types.js";

const WIDTH = 880;
const HEIGHT = 260;
const MARGIN = { top: 16, right: 52, bottom: 34, left: 44 };
const PLOT_W = WIDTH - MARGIN.left - MARGIN.right;
const PLOT_H = HEIGHT - MARGIN.top - MARGIN.bottom;

function monthStart(key: string): number {
  return Date.parse(`${key}-01T00:00:00Z`);
}

export function renderTimeline(container: HTMLElement, series: TimelineSeries,
                               selectedTime: string | null,
                               onSelectTime: (time: string) => void): void {
  container.replaceChildren();
  if (series.points.length === 0) {
    container.appendChild(el("p", "empty-state", "No snapshot pairs on this timeline."));
    return;
  }

  const pointTimes = series.points.map((p) => Date.parse(p.time));
  const monthKeys = [...Object.keys(series.edits1), ...Object.keys(series.edits2)];
  const xs = [...pointTimes, ...monthKeys.map(monthStart)];
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const xSpan = Math.max(xMax - xMin, 1);
  const x = (t: number) => MARGIN.left + ((t - xMin) / xSpan) * PLOT_W;
  const ySim = (v: number) => MARGIN.top + (1 - v) * PLOT_H;
  const maxEdits = Math.max(1, ...Object.values(series.edits1),
                            ...Object.values(series.edits2));
  const yEdits = (n: number) => (n / maxEdits) * (PLOT_H * 0.45);

  const svg = svgEl("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: "timeline-chart",
    role: "img",
  });

  // edit-count bars per calendar month, one thin bar per article
  const monthWidth = Math.max(2, Math.min(9, PLOT_W / Math.max(monthKeys.length, 1) / 2));
  for (const [bins, cls, shift] of [
    [series.edits1, "edits1", 0],
    [series.edits2, "edits2", 1],
  ] as const) {
    for (const [month, count] of Object.entries(bins)) {
      const height = yEdits(count);
      svg.appendChild(svgEl("rect", {
        class: `edit-bar ${cls}`,
        x: x(monthStart(month)) + shift * monthWidth,
        y: MARGIN.top + PLOT_H - height,
        width: monthWidth - 0.5,
        height,
      }));
    }
  }

  // axes
  svg.appendChild(svgEl("line", {
    class: "axis", x1: MARGIN.left, y1: MARGIN.top + PLOT_H,
    x2: MARGIN.left + PLOT_W, y2: MARGIN.top + PLOT_H,
  }));
  for (const v of [0, 0.5, 1]) {
    const label = svgEl("text", {
      class: "axis-label", x: MARGIN.left - 6, y: ySim(v) + 4, "text-anchor": "end",
    });
    label.textContent = v.toFixed(1);
    svg.appendChild(label);
    svg.appendChild(svgEl("line", {
      class: "grid", x1: MARGIN.left, y1: ySim(v),
      x2: MARGIN.left + PLOT_W, y2: ySim(v),
    }));
  }
  const editsLabel = svgEl("text", {
    class: "axis-label", x: MARGIN.left + PLOT_W + 6,
    y: MARGIN.top + PLOT_H - yEdits(maxEdits) + 4,
  });
  editsLabel.textContent = `${maxEdits}/mo`;
  svg.appendChild(editsLabel);
  const firstYear = new Date(xMin).getUTCFullYear();
  const lastYear = new Date(xMax).getUTCFullYear();
  for (let year = firstYear; year <= lastYear; year++) {
    const t = Date.parse(`${year}-01-01T00:00:00Z`);
    if (t < xMin || t > xMax) {
      continue;
    }
    const tick = svgEl("text", {
      class: "axis-label", x: x(t), y: MARGIN.top + PLOT_H + 16, "text-anchor": "middle",
    });
    tick.textContent = String(year);
    svg.appendChild(tick);
  }

  // similarity line + clickable markers
  if (series.points.length > 1) {
    const path = series.points
      .map((p, i) => `${i === 0 ? "M" : "L"} ${x(Date.parse(p.time))} ${ySim(p.sim)}`)
      .join(" ");
    svg.appendChild(svgEl("path", { class: "sim-line", d: path }));
  }
  for (const point of series.points) {
    const marker = svgEl("circle", {
      class: point.time === selectedTime ? "marker selected" : "marker",
      cx: x(Date.parse(point.time)),
      cy: ySim(point.sim),
      r: 6,
      "data-time": point.time,
    });
    const tooltip = svgEl("title");
    tooltip.textContent = `${dayOf(point.time)}: sim ${score2(point.sim)}`;
    marker.appendChild(tooltip);
    marker.addEventListener("click", () => onSelectTime(point.time));
    svg.appendChild(marker);
  }

  const legend = el("div", "timeline-legend");
  legend.append(
    el("span", "legend-sim", "similarity"),
    el("span", "legend-edits1", "edits A"),
    el("span", "legend-edits2", "edits B"),
  );
  container.append(svg, legend);
}
