/** Browser wiring: canvas, toolbar, brushes, and stats panels.
 *
 * Connects to the analysis service at the page origin, or at ?service=URL
 * when the page is opened from elsewhere (e.g. file://).
 */

import { BundleClient } from "./api.js";
import { ExplorerController } from "./controller.js";
import { statsPanelsHtml } from "./panels.js";
import { drawPlot } from "./render.js";
import { DEFAULT_LAYOUT, axisX, fullRanges, type Ranges } from "./scales.js";
import { visibleRows } from "./state.js";
import type { Bundle } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function serviceBase(): string {
  const override = new URLSearchParams(window.location.search).get("service");
  if (override) return override;
  if (window.location.protocol.startsWith("http")) return "";
  return "http://127.0.0.1:8760";
}

async function boot(): Promise<void> {
  const status = el<HTMLDivElement>("status");
  const client = new BundleClient(serviceBase());
  let bundle: Bundle;
  try {
    bundle = await client.fetchBundle();
  } catch (err) {
    status.textContent =
      `could not load bundle: ${err}. Start the service with ` +
      "`infoeda serve data.csv --class <name>` and reload.";
    return;
  }

  const controller = new ExplorerController(bundle, client);
  const ranges: Ranges = fullRanges(bundle);
  const layout = { ...DEFAULT_LAYOUT };
  const canvas = el<HTMLCanvasElement>("plot");
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("canvas 2d context unavailable");
  canvas.width = layout.width;
  canvas.height = layout.height;

  const panels = el<HTMLDivElement>("panels");
  const axisSelect = el<HTMLSelectElement>("axis-select");
  const alphaSlider = el<HTMLInputElement>("alpha");
  const classLegend = el<HTMLSpanElement>("legend");

  function redraw(): void {
    const highlighted = controller.highlighted();
    drawPlot(ctx!, { bundle, state: controller.state, ranges, layout, highlighted });
    const visible = visibleRows(controller.state, controller.nRows);
    const counts = highlighted === null ? "" : `, ${highlighted.size} highlighted`;
    status.textContent =
      `${visible.length}/${controller.nRows} rows${counts}` +
      (controller.state.lastError ? ` | rejected: ${controller.state.lastError}` : "");
    const levels = bundle.rows.class_levels ?? [];
    classLegend.innerHTML = levels
      .map((name, code) => {
        const safe = controller.state.colorblindSafe;
        const rgb = safe ? (code === 0 ? "0,110,180" : "230,125,0")
                         : (code === 0 ? "0,150,60" : "210,30,30");
        return `<span style="color: rgb(${rgb})">&#9632; ${name}</span>`;
      })
      .join(" ");
  }

  function redrawPanels(): void {
    panels.innerHTML = statsPanelsHtml(controller.state.stats);
  }

  function refreshAxisSelect(): void {
    axisSelect.innerHTML = controller.state.axisOrder
      .map((name) => `<option value="${name}">${name}</option>`)
      .join("");
  }

  controller.onStateChange = () => redraw();

  // axis brushing by vertical drag near an axis line
  let dragging: { axis: string; startY: number } | null = null;
  const yToValue = (axis: string, y: number): number => {
    const range = ranges.get(axis)!;
    const inner = layout.height - layout.marginTop - layout.marginBottom;
    const t = 1 - (y - layout.marginTop) / inner;
    const clamped = Math.max(0, Math.min(1, t));
    return range.min + clamped * (range.max - range.min);
  };
  const axisAt = (x: number): string | null => {
    const order = controller.state.axisOrder;
    for (let i = 0; i < order.length; i++) {
      if (Math.abs(axisX(i, order.length, layout) - x) <= 10) return order[i];
    }
    return null;
  };
  canvas.addEventListener("mousedown", (ev) => {
    const rect = canvas.getBoundingClientRect();
    const axis = axisAt(ev.clientX - rect.left);
    if (axis) dragging = { axis, startY: ev.clientY - rect.top };
  });
  canvas.addEventListener("mousemove", (ev) => {
    if (!dragging) return;
    const rect = canvas.getBoundingClientRect();
    const y = ev.clientY - rect.top;
    controller.brush(dragging.axis, {
      lo: yToValue(dragging.axis, dragging.startY),
      hi: yToValue(dragging.axis, y),
    });
  });
  window.addEventListener("mouseup", () => {
    dragging = null;
  });

  el<HTMLButtonElement>("clear-brush").addEventListener("click", () => {
    controller.clearBrushes();
  });
  el<HTMLButtonElement>("prune-selected").addEventListener("click", () => {
    const highlighted = controller.highlighted();
    if (!highlighted || highlighted.size === 0) return;
    void controller.prune(highlighted).then((outcome) => {
      if (outcome === "applied") redrawPanels();
      redraw();
    });
  });
  el<HTMLButtonElement>("prune-others").addEventListener("click", () => {
    const highlighted = controller.highlighted();
    if (!highlighted) return;
    const others = visibleRows(controller.state, controller.nRows).filter(
      (i) => !highlighted.has(i),
    );
    if (others.length === 0) return;
    void controller.prune(others).then((outcome) => {
      if (outcome === "applied") redrawPanels();
      redraw();
    });
  });
  el<HTMLButtonElement>("undo").addEventListener("click", () => {
    void controller.undo().then((outcome) => {
      if (outcome === "applied") redrawPanels();
      redraw();
    });
  });
  el<HTMLButtonElement>("move-left").addEventListener("click", () => moveAxis(-1));
  el<HTMLButtonElement>("move-right").addEventListener("click", () => moveAxis(1));
  el<HTMLButtonElement>("palette").addEventListener("click", () => {
    controller.togglePalette();
  });
  alphaSlider.addEventListener("input", () => {
    controller.alpha(Number(alphaSlider.value));
  });

  function moveAxis(delta: number): void {
    const order = controller.state.axisOrder.slice();
    const i = order.indexOf(axisSelect.value);
    const j = i + delta;
    if (i < 0 || j < 0 || j >= order.length) return;
    [order[i], order[j]] = [order[j], order[i]];
    controller.reorder(order);
    refreshAxisSelect();
    axisSelect.value = order[j];
  }

  refreshAxisSelect();
  redraw();
  redrawPanels();
}

void boot();
