/**
 * Workbench wiring: load a smear image, drag a rectangle over a target
 * cell, see the isolation result immediately. Each completed analysis is
 * badged on the image and kept in an exportable history.
 */
import { ApiClient, ApiError } from "./api.js";
import { overlayRects } from "./overlay.js";
import { CLASS_COLORS, renderError, renderPanel } from "./panel.js";
import { dragTooSmall, WorkbenchState } from "./state.js";
import type { Roi, ThresholdOverrides } from "./types.js";
import { dragToImageRoi, fitView, imageToCanvas, panBy, ViewTransform,
         zoomAbout } from "./view.js";

const $ = <T extends HTMLElement>(id: string): T =>
  document.getElementById(id) as T;

const api = new ApiClient("");
const state = new WorkbenchState();

let canvas: HTMLCanvasElement;
let ctx: CanvasRenderingContext2D;
let view: ViewTransform = { zoom: 1, panX: 0, panY: 0 };
let bitmap: ImageBitmap | null = null;
let dragStart: { x: number; y: number } | null = null;
let dragEnd: { x: number; y: number } | null = null;
let panning = false;
let lastPan = { x: 0, y: 0 };

function toast(message: string): void {
  const el = $("toast");
  el.textContent = message;
  el.classList.add("visible");
  window.setTimeout(() => el.classList.remove("visible"), 2500);
}

function thresholdOverrides(): ThresholdOverrides {
  const overrides: ThresholdOverrides = {};
  const fields: Array<[keyof ThresholdOverrides, string]> = [
    ["compactness_gate", "th-compactness"],
    ["spacing_gate", "th-spacing"],
    ["healthy_white_min", "th-white-min"],
    ["healthy_white_max", "th-white-max"],
    ["annulocyte_white_min", "th-annulo"],
    ["sickle_red_min", "th-red-min"],
  ];
  for (const [key, id] of fields) {
    const raw = ($(id) as HTMLInputElement).value.trim();
    if (raw !== "") overrides[key] = Number(raw);
  }
  return overrides;
}

function draw(): void {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!bitmap) return;
  ctx.imageSmoothingEnabled = view.zoom < 1;
  ctx.drawImage(bitmap, view.panX, view.panY,
    bitmap.width * view.zoom, bitmap.height * view.zoom);

  const showOverlay = ($("overlay-toggle") as HTMLInputElement).checked;

  // badges of completed analyses stay attached to their ROIs
  for (const entry of state.history) {
    const tl = imageToCanvas(view, entry.roi.x, entry.roi.y);
    const w = entry.roi.w * view.zoom;
    const h = entry.roi.h * view.zoom;
    const color = CLASS_COLORS[entry.report.label] ?? "#555";
    if (showOverlay) {
      ctx.fillStyle = color + "66"; // translucent isolated-cell mask
      for (const r of overlayRects(entry.report, view)) {
        ctx.fillRect(r.x, r.y, r.w, r.h);
      }
    }
    ctx.strokeStyle = color;
    ctx.lineWidth = 2;
    ctx.strokeRect(tl.x, tl.y, w, h);
    ctx.fillStyle = color;
    const label = entry.report.label;
    ctx.font = "12px sans-serif";
    const tw = ctx.measureText(label).width + 8;
    ctx.fillRect(tl.x, tl.y - 16, tw, 16);
    ctx.fillStyle = "#fff";
    ctx.fillText(label, tl.x + 4, tl.y - 4);
  }

  if (dragStart && dragEnd) {
    ctx.strokeStyle = "#1abc9c";
    ctx.setLineDash([5, 4]);
    ctx.lineWidth = 1.5;
    ctx.strokeRect(dragStart.x, dragStart.y,
      dragEnd.x - dragStart.x, dragEnd.y - dragStart.y);
    ctx.setLineDash([]);
  }
}

async function analyzeRoi(roi: Roi): Promise<void> {
  if (!state.session) return;
  const seq = state.issueRequest();
  const panel = $("panel");
  panel.textContent = "analyzing...";
  try {
    const result = await api.analyze(state.session, roi, thresholdOverrides());
    if (!state.completeRequest(seq, roi, result.report, result.rawJson)) {
      return; // superseded by a newer drag
    }
    panel.replaceChildren(renderPanel(result.report, document));
    $("history-count").textContent = String(state.history.length);
    draw();
  } catch (err) {
    if (err instanceof ApiError) {
      panel.replaceChildren(
        renderError({ error: err.kind, detail: err.detail }, document));
    } else {
      panel.textContent = `request failed: ${err}`;
    }
  }
}

async function uploadFile(file: File): Promise<void> {
  const contentType = file.name.toLowerCase().endsWith(".ppm")
    ? "image/x-portable-pixmap" : "image/png";
  try {
    const resp = await api.upload(file, contentType);
    state.startSession(resp.session, resp.width, resp.height);
    bitmap = await createImageBitmap(file).catch(() => null);
    if (!bitmap) {
      toast("preview not supported for this format; analysis still works");
    }
    view = fitView(resp.width, resp.height, canvas.width, canvas.height);
    $("session-info").textContent =
      `session ${resp.session.slice(0, 8)} - ${resp.width}x${resp.height}`;
    $("history-count").textContent = "0";
    $("panel").textContent = "drag a rectangle around one cell";
    draw();
  } catch (err) {
    toast(err instanceof ApiError ? err.message : `upload failed: ${err}`);
  }
}

function canvasPoint(ev: MouseEvent): { x: number; y: number } {
  const rect = canvas.getBoundingClientRect();
  // canvas buffer pixels, not CSS pixels: ROIs depend on exact coordinates
  return {
    x: (ev.clientX - rect.left) * (canvas.width / rect.width),
    y: (ev.clientY - rect.top) * (canvas.height / rect.height),
  };
}

function wire(): void {
  canvas = $("viewer");
  ctx = canvas.getContext("2d")!;

  $("file-input").addEventListener("change", (ev) => {
    const input = ev.target as HTMLInputElement;
    if (input.files && input.files[0]) void uploadFile(input.files[0]);
  });

  canvas.addEventListener("mousedown", (ev) => {
    if (!bitmap && !state.session) return;
    if (ev.shiftKey || ev.button === 1) {
      panning = true;
      lastPan = canvasPoint(ev);
      return;
    }
    dragStart = canvasPoint(ev);
    dragEnd = dragStart;
  });

  canvas.addEventListener("mousemove", (ev) => {
    if (panning) {
      const p = canvasPoint(ev);
      view = panBy(view, p.x - lastPan.x, p.y - lastPan.y);
      lastPan = p;
      draw();
      return;
    }
    if (!dragStart) return;
    dragEnd = canvasPoint(ev);
    draw();
  });

  window.addEventListener("mouseup", (ev) => {
    if (panning) {
      panning = false;
      return;
    }
    if (!dragStart) return;
    const start = dragStart;
    const end = canvasPoint(ev);
    dragStart = dragEnd = null;
    draw();
    if (dragTooSmall(start, end)) {
      toast("drag a larger rectangle (at least 8x8 px)");
      return;
    }
    const roi = dragToImageRoi(view, start, end,
      state.imageWidth, state.imageHeight);
    if (!roi) {
      toast("selection lies outside the image");
      return;
    }
    void analyzeRoi(roi);
  });

  canvas.addEventListener("wheel", (ev) => {
    ev.preventDefault();
    const p = canvasPoint(ev);
    view = zoomAbout(view, ev.deltaY < 0 ? 1.25 : 0.8, p.x, p.y);
    draw();
  }, { passive: false });

  $("zoom-fit").addEventListener("click", () => {
    if (state.session) {
      view = fitView(state.imageWidth, state.imageHeight,
        canvas.width, canvas.height);
      draw();
    }
  });

  $("overlay-toggle").addEventListener("change", draw);

  $("export").addEventListener("click", () => {
    if (state.history.length === 0) {
      toast("nothing analyzed yet");
      return;
    }
    const blob = new Blob([state.exportJsonLines() + "\n"],
      { type: "application/jsonl" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = "erythro-reports.jsonl";
    a.click();
    URL.revokeObjectURL(a.href);
  });

  void api.healthy().then((ok) => {
    $("service-status").textContent = ok ? "service: up" : "service: down";
  });
}

document.addEventListener("DOMContentLoaded", wire);
