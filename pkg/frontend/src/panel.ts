/**
 * Report panel: a declarative row model rendered into DOM.
 *
 * Every value shown comes verbatim from a field of the service response —
 * the UI never recomputes features. Each rendered value element carries a
 * data-field attribute naming the JSON path it mirrors, so tests (and the
 * curious) can walk the panel and compare against the raw report.
 */
import type { Report, ServiceError } from "./types.js";

export interface PanelRow {
  label: string;
  /** JSON path of the source field inside the report, dot-separated. */
  field: string;
  /** Display string; always a verbatim rendering of the field value. */
  value: string;
}

export const CLASS_COLORS: Record<string, string> = {
  Healthy: "#2e9e44",
  Annulocyte: "#c77f00",
  Sickle: "#c0392b",
  Acanthocyte: "#8e44ad",
  Elliptocyte: "#2471a3",
  Indeterminate: "#7f8c8d",
};

function show(value: number | string | boolean | null): string {
  if (value === null) return "n/a";
  return String(value);
}

function colorTriple(value: [number, number, number] | null): string {
  return value === null ? "n/a" : value.map((v) => String(v)).join(", ");
}

/** Rows mirroring the report's feature columns, one source field each. */
export function panelRows(report: Report): PanelRow[] {
  const m = report.morphometry;
  const c = report.colorimetry;
  return [
    { label: "Class", field: "label", value: show(report.label) },
    { label: "Area (px)", field: "morphometry.area", value: show(m.area) },
    { label: "Perimeter (px)", field: "morphometry.perimeter",
      value: show(m.perimeter) },
    { label: "Compactness", field: "morphometry.compactness",
      value: show(m.compactness) },
    { label: "Minor axis (px)", field: "morphometry.minor_axis",
      value: show(m.minor_axis) },
    { label: "Major axis (px)", field: "morphometry.major_axis",
      value: show(m.major_axis) },
    { label: "Axis spacing (px)", field: "morphometry.axis_spacing",
      value: show(m.axis_spacing) },
    { label: "Non-convex", field: "morphometry.varconvex",
      value: show(m.varconvex) },
    { label: "Extremity count", field: "morphometry.ncc", value: show(m.ncc) },
    { label: "Red pixels", field: "colorimetry.red_count",
      value: show(c.red_count) },
    { label: "White pixels", field: "colorimetry.white_count",
      value: show(c.white_count) },
    { label: "% Red", field: "colorimetry.pct_red", value: show(c.pct_red) },
    { label: "% White", field: "colorimetry.pct_white",
      value: show(c.pct_white) },
    { label: "Mean color (R, G, B)", field: "colorimetry.mean_color",
      value: colorTriple(c.mean_color) },
  ];
}

/** Look up a dot-separated path inside a parsed report. */
export function fieldValue(report: Report, path: string): unknown {
  let node: unknown = report;
  for (const part of path.split(".")) {
    node = (node as Record<string, unknown>)[part];
  }
  return node;
}

export function renderPanel(report: Report, doc: Document): HTMLElement {
  const root = doc.createElement("div");
  root.className = "report-panel";

  const badge = doc.createElement("span");
  badge.className = "badge";
  badge.dataset.field = "label";
  badge.textContent = report.label;
  badge.style.backgroundColor = CLASS_COLORS[report.label] ?? "#555";
  root.appendChild(badge);

  const table = doc.createElement("table");
  for (const row of panelRows(report)) {
    const tr = doc.createElement("tr");
    const th = doc.createElement("th");
    th.textContent = row.label;
    const td = doc.createElement("td");
    td.dataset.field = row.field;
    td.textContent = row.value;
    tr.appendChild(th);
    tr.appendChild(td);
    table.appendChild(tr);
  }
  root.appendChild(table);

  const traceTitle = doc.createElement("div");
  traceTitle.className = "trace-title";
  traceTitle.textContent = "Rule trace";
  root.appendChild(traceTitle);

  const trace = doc.createElement("ol");
  trace.className = "trace";
  report.trace.forEach((entry, i) => {
    const li = doc.createElement("li");
    li.dataset.field = `trace.${i}`;
    li.textContent = entry;
    if (report.label === "Sickle" && /^\d+ protruding extremities/.test(entry)) {
      li.className = "highlight"; // the count that decided the sickle call
    }
    trace.appendChild(li);
  });
  root.appendChild(trace);
  return root;
}

/** Amber badge plus the verbatim error body for failed analyses. */
export function renderError(err: ServiceError, doc: Document): HTMLElement {
  const root = doc.createElement("div");
  root.className = "report-panel error";
  const badge = doc.createElement("span");
  badge.className = "badge";
  badge.style.backgroundColor = "#d68910";
  badge.textContent = err.error;
  const detail = doc.createElement("pre");
  detail.textContent = JSON.stringify(err);
  root.appendChild(badge);
  root.appendChild(detail);
  return root;
}
