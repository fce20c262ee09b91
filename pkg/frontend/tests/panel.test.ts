/**
 * The report panel must display only service-provided values: walking every
 * rendered value cell and resolving its data-field path in the raw JSON has
 * to reproduce the displayed text exactly.
 */
// @vitest-environment happy-dom
import { describe, expect, it } from "vitest";

import { fieldValue, panelRows, renderError, renderPanel } from "../src/panel.js";
import type { Report } from "../src/types.js";
import { ANNULUS_REPORT_JSON, CRESCENT_REPORT_JSON } from "./fixtures.js";

function expectVerbatim(displayed: string, raw: unknown): void {
  if (raw === null) {
    expect(displayed).toBe("n/a");
  } else if (Array.isArray(raw)) {
    const parts = displayed.split(",").map((p) => p.trim());
    expect(parts).toEqual(raw.map((v) => String(v)));
  } else {
    expect(displayed).toBe(String(raw));
  }
}

describe("report panel", () => {
  for (const [name, json] of [
    ["annulus", ANNULUS_REPORT_JSON],
    ["crescent", CRESCENT_REPORT_JSON],
  ] as const) {
    it(`every displayed value equals its JSON field (${name})`, () => {
      const report = JSON.parse(json) as Report;
      const panel = renderPanel(report, document);
      const cells = panel.querySelectorAll<HTMLElement>("[data-field]");
      expect(cells.length).toBeGreaterThanOrEqual(15);
      for (const cell of cells) {
        const raw = fieldValue(report, cell.dataset.field!);
        expectVerbatim(cell.textContent ?? "", raw);
      }
    });
  }

  it("row model covers every feature column exactly once", () => {
    const report = JSON.parse(ANNULUS_REPORT_JSON) as Report;
    const fields = panelRows(report).map((r) => r.field);
    expect(new Set(fields).size).toBe(fields.length);
    for (const key of ["area", "perimeter", "compactness", "minor_axis",
      "major_axis", "axis_spacing", "varconvex", "ncc"]) {
      expect(fields).toContain(`morphometry.${key}`);
    }
    for (const key of ["red_count", "white_count", "pct_red", "pct_white",
      "mean_color"]) {
      expect(fields).toContain(`colorimetry.${key}`);
    }
  });

  it("sickle reports highlight the extremity-count trace entry", () => {
    const report = JSON.parse(CRESCENT_REPORT_JSON) as Report;
    const panel = renderPanel(report, document);
    const highlighted = panel.querySelectorAll("li.highlight");
    expect(highlighted.length).toBeGreaterThanOrEqual(1);
    expect(highlighted[0].textContent).toContain("2 protruding extremities");
  });

  it("badge carries the class label verbatim", () => {
    const report = JSON.parse(ANNULUS_REPORT_JSON) as Report;
    const badge = renderPanel(report, document).querySelector(".badge");
    expect(badge?.textContent).toBe(report.label);
  });

  it("service errors are shown verbatim", () => {
    const el = renderError(
      { error: "NoCellFound", detail: "no component with area >= 800 px" },
      document);
    expect(el.querySelector(".badge")?.textContent).toBe("NoCellFound");
    expect(el.querySelector("pre")?.textContent).toContain(
      "no component with area >= 800 px");
  });
});
