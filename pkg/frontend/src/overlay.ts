/** Geometry of the isolated-cell overlay: the report's ROI-relative mask
 * runs mapped into canvas rectangles under the current view transform. */
import type { Report } from "./types.js";
import { imageToCanvas, ViewTransform } from "./view.js";

export interface CanvasRect {
  x: number;
  y: number;
  w: number;
  h: number;
}

/** One canvas rectangle per mask run; empty when the report has no mask. */
export function overlayRects(report: Report, view: ViewTransform): CanvasRect[] {
  if (!report.isolation) return [];
  const rects: CanvasRect[] = [];
  for (const [row, start, length] of report.isolation.runs) {
    const tl = imageToCanvas(view, report.roi.x + start, report.roi.y + row);
    rects.push({ x: tl.x, y: tl.y, w: length * view.zoom, h: view.zoom });
  }
  return rects;
}

/** Total image-pixel count of the overlay; equals the reported cell area. */
export function overlayArea(report: Report): number {
  if (!report.isolation) return 0;
  return report.isolation.runs.reduce((acc, [, , length]) => acc + length, 0);
}
