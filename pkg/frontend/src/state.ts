/** Explorer view state and its pure transitions.
 *
 * Brushing and axis reordering are purely visual: only pruning changes which
 * rows exist, and only a service response whose subset hash matches the
 * current visible row set may update the stats panel.
 */

import { subsetHash } from "./hash.js";
import type { Bundle, Stats } from "./types.js";

export interface BrushInterval {
  lo: number;
  hi: number;
}

export interface ViewState {
  axisOrder: string[];
  brushes: Map<string, BrushInterval>;
  alpha: number;
  colorblindSafe: boolean;
  pruned: Set<number>;
  /** previous pruned sets, oldest first; full session history */
  history: Set<number>[];
  stats: Stats;
  /** subset hash the current stats correspond to */
  statsHash: string;
  /** subset hash of the latest recompute request still in flight, if any */
  pendingHash: string | null;
  lastError: string | null;
}

export const MIN_ALPHA = 0.01;

/** Default row colors: first class level green (background-like), second red
 * (signal-like); the colorblind-safe palette swaps to blue/orange. */
export function classColor(code: number, colorblindSafe: boolean): [number, number, number] {
  const normal: [number, number, number][] = [
    [0, 150, 60],
    [210, 30, 30],
    [60, 90, 200],
    [200, 140, 0],
  ];
  const safe: [number, number, number][] = [
    [0, 110, 180],
    [230, 125, 0],
    [86, 180, 233],
    [213, 94, 0],
  ];
  const palette = colorblindSafe ? safe : normal;
  return palette[code % palette.length];
}

export function createViewState(bundle: Bundle): ViewState {
  const allRows = bundle.rows.data.map((_, i) => i);
  return {
    axisOrder: bundle.rows.columns.slice(),
    brushes: new Map(),
    alpha: 0.35,
    colorblindSafe: false,
    pruned: new Set(),
    history: [],
    stats: { si: bundle.si, ranking: bundle.ranking, vid: bundle.vid },
    statsHash: subsetHash(allRows),
    pendingHash: null,
    lastError: null,
  };
}

export function visibleRows(state: ViewState, nRows: number): number[] {
  const out: number[] = [];
  for (let i = 0; i < nRows; i++) {
    if (!state.pruned.has(i)) out.push(i);
  }
  return out;
}

/** Set a brush; an inverted interval is silently normalized by swapping ends. */
export function setBrush(state: ViewState, axis: string, interval: BrushInterval): ViewState {
  if (!state.axisOrder.includes(axis)) {
    throw new Error(`unknown axis ${axis}`);
  }
  const lo = Math.min(interval.lo, interval.hi);
  const hi = Math.max(interval.lo, interval.hi);
  const brushes = new Map(state.brushes);
  brushes.set(axis, { lo, hi });
  return { ...state, brushes };
}

export function clearBrush(state: ViewState, axis?: string): ViewState {
  const brushes = new Map(state.brushes);
  if (axis === undefined) {
    brushes.clear();
  } else {
    brushes.delete(axis);
  }
  return { ...state, brushes };
}

/**
 * Row indices passing through every active brush interval, or null when no
 * brush is active (no selection, nothing dimmed).
 */
export function highlightedRows(
  state: ViewState,
  rows: number[][],
  columns: string[],
  nRows: number,
): Set<number> | null {
  if (state.brushes.size === 0) return null;
  const checks: { col: number; lo: number; hi: number }[] = [];
  for (const [axis, interval] of state.brushes) {
    const col = columns.indexOf(axis);
    if (col < 0) throw new Error(`unknown axis ${axis}`);
    checks.push({ col, lo: interval.lo, hi: interval.hi });
  }
  const selected = new Set<number>();
  for (const i of visibleRows(state, nRows)) {
    let pass = true;
    for (const c of checks) {
      const v = rows[i][c.col];
      if (v < c.lo || v > c.hi) {
        pass = false;
        break;
      }
    }
    if (pass) selected.add(i);
  }
  return selected;
}

/** Remove rows from the view; already-pruned rows are ignored. Returns the
 * new state and the surviving row indices to send for recompute. */
export function pruneRows(
  state: ViewState,
  selection: Iterable<number>,
  nRows: number,
): { state: ViewState; survivors: number[] } {
  const pruned = new Set(state.pruned);
  for (const i of selection) {
    if (i >= 0 && i < nRows) pruned.add(i);
  }
  const next: ViewState = {
    ...state,
    pruned,
    history: [...state.history, state.pruned],
  };
  return { state: next, survivors: visibleRows(next, nRows) };
}

export function undoPrune(state: ViewState): ViewState {
  if (state.history.length === 0) return state;
  const history = state.history.slice(0, -1);
  const pruned = state.history[state.history.length - 1];
  return { ...state, pruned, history };
}

export function reorderAxes(state: ViewState, order: string[]): ViewState {
  const current = [...state.axisOrder].sort();
  const proposed = [...order].sort();
  const isPermutation =
    current.length === proposed.length &&
    current.every((name, i) => name === proposed[i]);
  if (!isPermutation) {
    throw new Error(`axis order ${order.join(",")} is not a permutation`);
  }
  return { ...state, axisOrder: order.slice() };
}

export function setAlpha(state: ViewState, alpha: number): ViewState {
  const clamped = Math.max(MIN_ALPHA, Math.min(1, alpha));
  return { ...state, alpha: clamped };
}

export function toggleColorblindSafe(state: ViewState): ViewState {
  return { ...state, colorblindSafe: !state.colorblindSafe };
}

/** Apply a recompute response only if it matches the current visible set. */
export function applyStats(
  state: ViewState,
  response: { subset_hash: string } & Stats,
  nRows: number,
): { state: ViewState; applied: boolean } {
  const expected = subsetHash(visibleRows(state, nRows));
  if (response.subset_hash !== expected) {
    return { state, applied: false };
  }
  return {
    state: {
      ...state,
      stats: { si: response.si, ranking: response.ranking, vid: response.vid },
      statsHash: response.subset_hash,
      pendingHash: null,
      lastError: null,
    },
    applied: true,
  };
}

export function setError(state: ViewState, message: string): ViewState {
  return { ...state, lastError: message, pendingHash: null };
}
