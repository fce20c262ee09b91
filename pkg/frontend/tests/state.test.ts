/** Session state: history, stale-response dropping, JSONL export. */
import { describe, expect, it } from "vitest";

import { dragTooSmall, WorkbenchState } from "../src/state.js";
import type { Report } from "../src/types.js";
import { ANNULUS_REPORT_JSON, CRESCENT_REPORT_JSON } from "./fixtures.js";

const annulus = JSON.parse(ANNULUS_REPORT_JSON) as Report;
const crescent = JSON.parse(CRESCENT_REPORT_JSON) as Report;
const roi = { x: 0, y: 0, w: 120, h: 120 };

describe("workbench state", () => {
  it("keeps completed reports with their ROIs", () => {
    const state = new WorkbenchState();
    state.startSession("abc", 120, 120);
    const seq = state.issueRequest();
    expect(state.completeRequest(seq, roi, annulus, ANNULUS_REPORT_JSON))
      .toBe(true);
    expect(state.history).toHaveLength(1);
    expect(state.history[0].roi).toEqual(roi);
    expect(state.history[0].report.label).toBe("Annulocyte");
  });

  it("drops responses superseded by a newer drag", () => {
    const state = new WorkbenchState();
    state.startSession("abc", 120, 120);
    const first = state.issueRequest();
    const second = state.issueRequest();
    expect(state.completeRequest(first, roi, annulus, ANNULUS_REPORT_JSON))
      .toBe(false);
    expect(state.completeRequest(second, roi, crescent, CRESCENT_REPORT_JSON))
      .toBe(true);
    expect(state.history.map((e) => e.report.label)).toEqual(["Sickle"]);
  });

  it("re-analyzing the same ROI appends an identical entry", () => {
    const state = new WorkbenchState();
    state.startSession("abc", 120, 120);
    for (let i = 0; i < 2; i++) {
      const seq = state.issueRequest();
      state.completeRequest(seq, roi, annulus, ANNULUS_REPORT_JSON);
    }
    expect(state.history).toHaveLength(2);
    expect(state.history[0].rawJson).toBe(state.history[1].rawJson);
  });

  it("exports history as JSON lines of the exact service bodies", () => {
    const state = new WorkbenchState();
    state.startSession("abc", 120, 120);
    let seq = state.issueRequest();
    state.completeRequest(seq, roi, annulus, ANNULUS_REPORT_JSON);
    seq = state.issueRequest();
    state.completeRequest(seq, roi, crescent, CRESCENT_REPORT_JSON);
    expect(state.exportJsonLines())
      .toBe(`${ANNULUS_REPORT_JSON}\n${CRESCENT_REPORT_JSON}`);
  });

  it("a new session clears history", () => {
    const state = new WorkbenchState();
    state.startSession("abc", 120, 120);
    const seq = state.issueRequest();
    state.completeRequest(seq, roi, annulus, ANNULUS_REPORT_JSON);
    state.startSession("def", 64, 64);
    expect(state.history).toHaveLength(0);
    expect(state.imageWidth).toBe(64);
  });
});

describe("drag size guard", () => {
  it("discards sub-8px drags", () => {
    expect(dragTooSmall({ x: 0, y: 0 }, { x: 3, y: 3 })).toBe(true);
    expect(dragTooSmall({ x: 0, y: 0 }, { x: 30, y: 5 })).toBe(true);
  });

  it("accepts intentional rectangles", () => {
    expect(dragTooSmall({ x: 0, y: 0 }, { x: 8, y: 8 })).toBe(false);
    expect(dragTooSmall({ x: 40, y: 40 }, { x: 10, y: 10 })).toBe(false);
  });
});
