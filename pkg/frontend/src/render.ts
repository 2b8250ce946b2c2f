/** Canvas rendering of the parallel-coordinates plot.
 *
 * One polyline per visible row, colored by class with additive-feel alpha
 * blending (overlapping red and green reads as yellow). Highlighted rows keep
 * full alpha while everything else is dimmed.
 */

import type { Layout, Ranges } from "./scales.js";
import { axisX, polylineGeometry } from "./scales.js";
import { classColor, type ViewState, visibleRows } from "./state.js";
import type { Bundle } from "./types.js";

export interface RenderInput {
  bundle: Bundle;
  state: ViewState;
  ranges: Ranges;
  layout: Layout;
  highlighted: Set<number> | null;
}

export function drawPlot(ctx: CanvasRenderingContext2D, input: RenderInput): void {
  const { bundle, state, ranges, layout, highlighted } = input;
  ctx.clearRect(0, 0, layout.width, layout.height);
  const rows = bundle.rows.data;
  const codes = bundle.rows.class_codes;
  const visible = visibleRows(state, rows.length);

  if (visible.length === 0) {
    ctx.fillStyle = "#666";
    ctx.font = "14px sans-serif";
    ctx.textAlign = "center";
    ctx.fillText("all rows pruned", layout.width / 2, layout.height / 2);
    drawAxes(ctx, state.axisOrder, layout);
    return;
  }

  const lines = polylineGeometry(
    visible.map((i) => rows[i]),
    bundle.rows.columns,
    state.axisOrder,
    ranges,
    layout,
  );
  ctx.lineWidth = 1;
  ctx.globalCompositeOperation = "lighter"; // blend overlapping classes
  lines.forEach((line, k) => {
    const rowIndex = visible[k];
    const code = codes ? codes[rowIndex] : 0;
    const [r, g, b] = classColor(code, state.colorblindSafe);
    const dim = highlighted !== null && !highlighted.has(rowIndex);
    const alpha = dim ? state.alpha * 0.12 : state.alpha;
    ctx.strokeStyle = `rgba(${r}, ${g}, ${b}, ${alpha})`;
    ctx.beginPath();
    ctx.moveTo(line[0], line[1]);
    for (let i = 1; i < line.length / 2; i++) {
      ctx.lineTo(line[2 * i], line[2 * i + 1]);
    }
    ctx.stroke();
  });
  ctx.globalCompositeOperation = "source-over";
  drawAxes(ctx, state.axisOrder, layout);
  drawBrushes(ctx, input);
}

function drawAxes(ctx: CanvasRenderingContext2D, axisOrder: string[], layout: Layout): void {
  ctx.strokeStyle = "#334";
  ctx.fillStyle = "#223";
  ctx.lineWidth = 1;
  ctx.font = "12px sans-serif";
  ctx.textAlign = "center";
  axisOrder.forEach((name, i) => {
    const x = axisX(i, axisOrder.length, layout);
    ctx.beginPath();
    ctx.moveTo(x, layout.marginTop);
    ctx.lineTo(x, layout.height - layout.marginBottom);
    ctx.stroke();
    ctx.fillText(name, x, layout.height - layout.marginBottom + 18);
  });
}

function drawBrushes(ctx: CanvasRenderingContext2D, input: RenderInput): void {
  const { state, ranges, layout } = input;
  for (const [axis, interval] of state.brushes) {
    const i = state.axisOrder.indexOf(axis);
    const range = ranges.get(axis);
    if (i < 0 || range === undefined) continue;
    const x = axisX(i, state.axisOrder.length, layout);
    const inner = layout.height - layout.marginTop - layout.marginBottom;
    const span = range.max - range.min;
    const t = (v: number) => (span <= 0 ? 0.5 : (v - range.min) / span);
    const yLo = layout.marginTop + inner * (1 - t(interval.hi));
    const yHi = layout.marginTop + inner * (1 - t(interval.lo));
    ctx.fillStyle = "rgba(40, 90, 200, 0.18)";
    ctx.strokeStyle = "rgba(40, 90, 200, 0.8)";
    ctx.fillRect(x - 7, yLo, 14, Math.max(1, yHi - yLo));
    ctx.strokeRect(x - 7, yLo, 14, Math.max(1, yHi - yLo));
  }
}
