/**
 * Workbench state: the active session, completed reports with their ROIs,
 * and the in-flight request bookkeeping that drops stale responses when a
 * newer drag supersedes an older one.
 */
import type { Report, Roi } from "./types.js";

export interface HistoryEntry {
  seq: number;
  roi: Roi;
  report: Report;
  rawJson: string;
}

export const MIN_DRAG_CANVAS_PX = 8;

export class WorkbenchState {
  session: string | null = null;
  imageWidth = 0;
  imageHeight = 0;
  history: HistoryEntry[] = [];
  private nextSeq = 1;
  private latestIssued = 0;

  startSession(session: string, width: number, height: number): void {
    this.session = session;
    this.imageWidth = width;
    this.imageHeight = height;
    this.history = [];
    this.latestIssued = 0;
  }

  /** Sequence number for a new analyze request; only the newest wins. */
  issueRequest(): number {
    this.latestIssued = this.nextSeq++;
    return this.latestIssued;
  }

  /** Record a completed analysis unless a newer request was issued since. */
  completeRequest(
    seq: number, roi: Roi, report: Report, rawJson: string,
  ): boolean {
    if (seq !== this.latestIssued) return false; // stale response dropped
    this.history.push({ seq, roi, report, rawJson });
    return true;
  }

  /** JSON-lines export, byte-identical to the service bodies (and therefore
   * to the batch CLI output for the same ROIs). */
  exportJsonLines(): string {
    return this.history.map((e) => e.rawJson).join("\n");
  }
}

/** True when a drag gesture is too small to be an intentional ROI. */
export function dragTooSmall(
  start: { x: number; y: number }, end: { x: number; y: number },
): boolean {
  return Math.abs(end.x - start.x) < MIN_DRAG_CANVAS_PX
    || Math.abs(end.y - start.y) < MIN_DRAG_CANVAS_PX;
}
