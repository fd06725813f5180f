/**
 * The statistics panel shown between the two model panes: both slices'
 * numbers side by side with their absolute differences, straight from
 * the comparison JSON.
 */
import type { ComparisonJson } from "./types.js";

function duration(seconds: number): string {
  return `${seconds.toFixed(1)} s`;
}

export function renderStatsPanel(container: HTMLElement, comparison: ComparisonJson): void {
  const left = comparison.left.statistics;
  const right = comparison.right.statistics;
  const delta = comparison.statistics_delta;
  const rows: [string, string, string, string][] = [
    ["cases", String(left.case_count), String(delta.case_count), String(right.case_count)],
    ["variants", String(left.variant_count), String(delta.variant_count), String(right.variant_count)],
    ["events", String(left.event_count), String(delta.event_count), String(right.event_count)],
    ["avg case duration", duration(left.avg_case_duration_s),
     duration(delta.avg_case_duration_s), duration(right.avg_case_duration_s)],
  ];

  const table = document.createElement("table");
  table.className = "stats";
  const head = table.createTHead().insertRow();
  for (const text of ["", comparison.left.label, "|Δ|", comparison.right.label]) {
    const cell = document.createElement("th");
    cell.textContent = text;
    head.appendChild(cell);
  }
  const body = table.createTBody();
  for (const [name, l, d, r] of rows) {
    const row = body.insertRow();
    const header = document.createElement("th");
    header.textContent = name;
    row.appendChild(header);
    for (const [index, value] of [l, d, r].entries()) {
      const cell = row.insertCell();
      cell.textContent = value;
      if (index === 1) cell.dataset.role = "delta";
    }
  }

  container.textContent = "";
  container.appendChild(table);
}
