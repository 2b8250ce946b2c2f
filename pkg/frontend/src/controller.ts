/** Orchestrates view-state transitions and recompute round-trips.
 *
 * Brushing, reordering, alpha, and palette changes never touch the service;
 * pruning (and undo) sends the surviving row set, and the stats panel only
 * changes when a response matching the current subset hash arrives. A
 * rejected prune is rolled back so the view stays unchanged.
 */

import { BundleClient, ServiceRejection } from "./api.js";
import {
  applyStats,
  clearBrush,
  createViewState,
  highlightedRows,
  pruneRows,
  reorderAxes,
  setAlpha,
  setBrush,
  setError,
  toggleColorblindSafe,
  undoPrune,
  visibleRows,
  type BrushInterval,
  type ViewState,
} from "./state.js";
import type { Bundle } from "./types.js";

export type PruneOutcome = "applied" | "rejected" | "superseded";

export class ExplorerController {
  state: ViewState;
  readonly bundle: Bundle;
  onStateChange: (state: ViewState) => void = () => {};

  private readonly client: BundleClient;

  constructor(bundle: Bundle, client: BundleClient) {
    this.bundle = bundle;
    this.client = client;
    this.state = createViewState(bundle);
  }

  get nRows(): number {
    return this.bundle.rows.data.length;
  }

  visible(): number[] {
    return visibleRows(this.state, this.nRows);
  }

  highlighted(): Set<number> | null {
    return highlightedRows(
      this.state,
      this.bundle.rows.data,
      this.bundle.rows.columns,
      this.nRows,
    );
  }

  brush(axis: string, interval: BrushInterval): void {
    this.update(setBrush(this.state, axis, interval));
  }

  clearBrushes(axis?: string): void {
    this.update(clearBrush(this.state, axis));
  }

  reorder(order: string[]): void {
    this.update(reorderAxes(this.state, order));
  }

  alpha(value: number): void {
    this.update(setAlpha(this.state, value));
  }

  togglePalette(): void {
    this.update(toggleColorblindSafe(this.state));
  }

  async prune(selection: Iterable<number>): Promise<PruneOutcome> {
    const { state: next, survivors } = pruneRows(this.state, selection, this.nRows);
    this.update(next);
    return this.refreshStats(survivors, true);
  }

  async undo(): Promise<PruneOutcome> {
    this.update(undoPrune(this.state));
    return this.refreshStats(this.visible(), false);
  }

  private async refreshStats(survivors: number[], rollbackOnReject: boolean):
      Promise<PruneOutcome> {
    try {
      const response = await this.client.recompute(survivors);
      if (response === null) return "superseded";
      const { state, applied } = applyStats(this.state, response, this.nRows);
      if (!applied) return "superseded";
      this.update(state);
      return "applied";
    } catch (err) {
      if (err instanceof ServiceRejection) {
        const reverted = rollbackOnReject ? undoPrune(this.state) : this.state;
        this.update(setError(reverted, err.message));
        return "rejected";
      }
      throw err;
    }
  }

  private update(state: ViewState): void {
    this.state = state;
    this.onStateChange(state);
  }
}
