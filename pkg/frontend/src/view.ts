/**
 * View transform between image pixels and canvas (CSS) pixels.
 *
 * ROIs must reach the service in image pixels: the classifier's axis-spacing
 * gate is an absolute pixel distance, so coordinates scaled by zoom would be
 * meaningless. All conversions therefore round only at the image-pixel edge.
 */
import type { Roi } from "./types.js";

export interface ViewTransform {
  zoom: number;   // canvas px per image px
  panX: number;   // canvas position of image pixel (0, 0)
  panY: number;
}

export function imageToCanvas(
  view: ViewTransform, ix: number, iy: number,
): { x: number; y: number } {
  return { x: view.panX + ix * view.zoom, y: view.panY + iy * view.zoom };
}

export function canvasToImage(
  view: ViewTransform, cx: number, cy: number,
): { x: number; y: number } {
  return { x: (cx - view.panX) / view.zoom, y: (cy - view.panY) / view.zoom };
}

/** Convert a canvas-space drag rectangle to an integral image-pixel ROI,
 * clamped to the image bounds. Returns null when the drag collapses to
 * nothing inside the image. */
export function dragToImageRoi(
  view: ViewTransform,
  start: { x: number; y: number },
  end: { x: number; y: number },
  imageWidth: number,
  imageHeight: number,
): Roi | null {
  const a = canvasToImage(view, start.x, start.y);
  const b = canvasToImage(view, end.x, end.y);
  let x0 = Math.floor(Math.min(a.x, b.x));
  let y0 = Math.floor(Math.min(a.y, b.y));
  let x1 = Math.ceil(Math.max(a.x, b.x));
  let y1 = Math.ceil(Math.max(a.y, b.y));
  x0 = Math.max(0, Math.min(x0, imageWidth));
  y0 = Math.max(0, Math.min(y0, imageHeight));
  x1 = Math.max(0, Math.min(x1, imageWidth));
  y1 = Math.max(0, Math.min(y1, imageHeight));
  if (x1 - x0 <= 0 || y1 - y0 <= 0) return null;
  return { x: x0, y: y0, w: x1 - x0, h: y1 - y0 };
}

/** Fit the whole image in the canvas, centered, without upscaling past 4x. */
export function fitView(
  imageWidth: number, imageHeight: number,
  canvasWidth: number, canvasHeight: number,
): ViewTransform {
  const zoom = Math.min(
    canvasWidth / imageWidth, canvasHeight / imageHeight, 4,
  );
  return {
    zoom,
    panX: (canvasWidth - imageWidth * zoom) / 2,
    panY: (canvasHeight - imageHeight * zoom) / 2,
  };
}

/** Zoom about a canvas-space anchor so the anchored image point stays put. */
export function zoomAbout(
  view: ViewTransform, factor: number, anchorX: number, anchorY: number,
): ViewTransform {
  const zoom = Math.min(32, Math.max(1 / 32, view.zoom * factor));
  const scale = zoom / view.zoom;
  return {
    zoom,
    panX: anchorX - (anchorX - view.panX) * scale,
    panY: anchorY - (anchorY - view.panY) * scale,
  };
}

export function panBy(view: ViewTransform, dx: number, dy: number): ViewTransform {
  return { zoom: view.zoom, panX: view.panX + dx, panY: view.panY + dy };
}
