/** Axis scales and polyline geometry.
 *
 * Every axis is normalized by the min-max of the FULL, unpruned dataset and
 * that frame never changes afterwards: pruning must not rescale the view.
 */

import type { Bundle } from "./types.js";

export interface AxisRange {
  min: number;
  max: number;
}

export type Ranges = Map<string, AxisRange>;

export function fullRanges(bundle: Bundle): Ranges {
  const ranges: Ranges = new Map();
  for (const v of bundle.dataset.variables) {
    ranges.set(v.name, { min: v.min, max: v.max });
  }
  return ranges;
}

/** Normalized position of a value on its axis, in [0, 1]; degenerate axes pin to 0.5. */
export function normalize(value: number, range: AxisRange): number {
  const span = range.max - range.min;
  if (span <= 0) return 0.5;
  const t = (value - range.min) / span;
  return t < 0 ? 0 : t > 1 ? 1 : t;
}

export interface Layout {
  width: number;
  height: number;
  marginX: number;
  marginTop: number;
  marginBottom: number;
}

export const DEFAULT_LAYOUT: Layout = {
  width: 960,
  height: 480,
  marginX: 50,
  marginTop: 24,
  marginBottom: 36,
};

export function axisX(index: number, axisCount: number, layout: Layout): number {
  if (axisCount === 1) return layout.width / 2;
  const inner = layout.width - 2 * layout.marginX;
  return layout.marginX + (inner * index) / (axisCount - 1);
}

export function valueY(value: number, range: AxisRange, layout: Layout): number {
  const inner = layout.height - layout.marginTop - layout.marginBottom;
  // screen y grows downward; high values sit at the top of the axis
  return layout.marginTop + inner * (1 - normalize(value, range));
}

/**
 * Interleaved x,y screen coordinates of one polyline per row.
 * Row k of the result crosses axis j at the row's normalized value.
 */
export function polylineGeometry(
  rows: number[][],
  columns: string[],
  axisOrder: string[],
  ranges: Ranges,
  layout: Layout,
): Float64Array[] {
  const columnIndex = new Map(columns.map((name, i) => [name, i]));
  const axes = axisOrder.map((name) => {
    const j = columnIndex.get(name);
    const range = ranges.get(name);
    if (j === undefined || range === undefined) {
      throw new Error(`unknown axis ${name}`);
    }
    return { j, range };
  });
  const xs = axes.map((_, i) => axisX(i, axes.length, layout));
  return rows.map((row) => {
    const line = new Float64Array(2 * axes.length);
    axes.forEach((axis, i) => {
      line[2 * i] = xs[i];
      line[2 * i + 1] = valueY(row[axis.j], axis.range, layout);
    });
    return line;
  });
}
