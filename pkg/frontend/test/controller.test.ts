import { describe, expect, it } from "vitest";

import { BundleClient } from "../src/api.js";
import { ExplorerController } from "../src/controller.js";
import { visibleRows } from "../src/state.js";
import {
  fixtureBundle,
  fixtureError,
  fixtureMeta,
  fixturePruned,
  stubFetch,
} from "./helpers.js";

function prunedSetup() {
  const bundle = fixtureBundle();
  const meta = fixtureMeta();
  const pruned = fixturePruned();
  const error = fixtureError();
  const fetchImpl = stubFetch({
    "/recompute": async (body) => {
      const rows = (JSON.parse(body!) as { rows: number[] }).rows;
      if (rows.length === meta.pruned_request_rows.length) {
        return { status: 200, json: pruned };
      }
      return { status: error.status, json: error };
    },
  });
  const controller = new ExplorerController(bundle, new BundleClient("", fetchImpl));
  return { bundle, meta, pruned, error, controller };
}

describe("prune round-trip", () => {
  it("applies the service stats for the pruned subset (same payload a batch run yields)", async () => {
    const { meta, pruned, controller } = prunedSetup();
    const toRemove = Array.from({ length: meta.n_rows }, (_, i) => i).filter(
      (i) => !meta.pruned_request_rows.includes(i),
    );
    const outcome = await controller.prune(toRemove);
    expect(outcome).toBe("applied");
    // the fixture payload was produced by the same analysis the CLI batch path runs
    expect(controller.state.stats.si).toEqual(pruned.si);
    expect(controller.state.stats.ranking).toEqual(pruned.ranking);
    expect(controller.state.stats.vid).toEqual(pruned.vid);
    expect(controller.state.statsHash).toBe(pruned.subset_hash);
    expect(controller.state.lastError).toBeNull();
  });

  it("prune to an all-one-class state: inline error, stats and view unchanged", async () => {
    const { bundle, meta, error, controller } = prunedSetup();
    const statsBefore = controller.state.stats;
    const keep = new Set(meta.error_request_rows);
    const toRemove = Array.from({ length: meta.n_rows }, (_, i) => i).filter(
      (i) => !keep.has(i),
    );
    const outcome = await controller.prune(toRemove);
    expect(outcome).toBe("rejected");
    expect(controller.state.lastError).toBe(error.error);
    expect(controller.state.stats).toBe(statsBefore); // no panel update
    // view rolled back: nothing stays pruned after the rejection
    expect(visibleRows(controller.state, meta.n_rows)).toHaveLength(meta.n_rows);
    expect(bundle.rows.data).toHaveLength(meta.n_rows);
  });

  it("prune of zero rows keeps statistics identical", async () => {
    const bundle = fixtureBundle();
    const fetchImpl = stubFetch({
      "/recompute": async (body) => {
        const rows = (JSON.parse(body!) as { rows: number[] }).rows;
        expect(rows).toHaveLength(bundle.rows.data.length);
        // service answers the identity subset with the bundle's own stats
        return {
          status: 200,
          json: {
            subset_hash: (await import("../src/hash.js")).subsetHash(rows),
            n_rows: rows.length,
            si: bundle.si,
            ranking: bundle.ranking,
            vid: bundle.vid,
          },
        };
      },
    });
    const controller = new ExplorerController(bundle, new BundleClient("", fetchImpl));
    const before = controller.state.stats;
    const outcome = await controller.prune([]);
    expect(outcome).toBe("applied");
    expect(controller.state.stats.si).toEqual(before.si);
    expect(controller.state.stats.ranking).toEqual(before.ranking);
  });

  it("undo after a prune recomputes the previous subset", async () => {
    const { meta, controller } = prunedSetup();
    const toRemove = Array.from({ length: meta.n_rows }, (_, i) => i).filter(
      (i) => !meta.pruned_request_rows.includes(i),
    );
    await controller.prune(toRemove);
    expect(visibleRows(controller.state, meta.n_rows)).toEqual(meta.pruned_request_rows);
    // undo's recompute asks for the full set, which the stub rejects (wrong
    // length is routed to the error payload) - the view must still be restored
    const outcome = await controller.undo();
    expect(outcome).toBe("rejected");
    expect(visibleRows(controller.state, meta.n_rows)).toHaveLength(meta.n_rows);
  });
});

describe("stale responses", () => {
  it("a superseded recompute never touches the panels", async () => {
    const bundle = fixtureBundle();
    const nRows = bundle.rows.data.length;
    const { subsetHash } = await import("../src/hash.js");
    let releaseFirst: (() => void) | null = null;
    const firstGate = new Promise<void>((resolve) => {
      releaseFirst = resolve;
    });
    let calls = 0;
    const fetchImpl = stubFetch({
      "/recompute": async (body) => {
        const rows = (JSON.parse(body!) as { rows: number[] }).rows;
        calls += 1;
        if (calls === 1) await firstGate; // stall the first request
        return {
          status: 200,
          json: {
            subset_hash: subsetHash(rows),
            n_rows: rows.length,
            si: bundle.si,
            ranking: { ...bundle.ranking, strategy: `answer-${calls}` },
            vid: bundle.vid,
          },
        };
      },
    });
    const controller = new ExplorerController(bundle, new BundleClient("", fetchImpl));
    const first = controller.prune([0]);
    const second = controller.prune([1]);
    const secondOutcome = await second;
    releaseFirst!();
    const firstOutcome = await first;
    expect(secondOutcome).toBe("applied");
    expect(firstOutcome).toBe("superseded");
    // stats reflect the second (current) subset, not the stale first answer
    expect(controller.state.stats.ranking.strategy).toBe("answer-2");
    expect(controller.state.statsHash).toBe(subsetHash(visibleRows(controller.state, nRows)));
  });
});

describe("visual-only interactions", () => {
  it("brushing and reordering never call the service", async () => {
    const bundle = fixtureBundle();
    let calls = 0;
    const fetchImpl = stubFetch({
      "/recompute": async () => {
        calls += 1;
        return { status: 500, json: {} };
      },
    });
    const controller = new ExplorerController(bundle, new BundleClient("", fetchImpl));
    const v = bundle.dataset.variables[0];
    controller.brush(v.name, { lo: v.min, hi: v.max });
    controller.reorder([...controller.state.axisOrder].reverse());
    controller.alpha(0.8);
    controller.togglePalette();
    controller.clearBrushes();
    expect(calls).toBe(0);
  });
});
