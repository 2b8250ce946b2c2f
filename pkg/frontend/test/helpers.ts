/** Shared test helpers: fixture loading and synthetic bundle construction. */

import { readFileSync } from "node:fs";
import type { Bundle, RecomputeResponse, ServiceError, Stats } from "../src/types.js";

const FIXTURES = new URL("./fixtures/", import.meta.url);

export function loadFixture<T>(name: string): T {
  return JSON.parse(readFileSync(new URL(name, FIXTURES), "utf-8")) as T;
}

export const fixtureBundle = (): Bundle => loadFixture<Bundle>("bundle.json");
export const fixturePruned = (): RecomputeResponse =>
  loadFixture<RecomputeResponse>("recompute_pruned.json");
export const fixtureError = (): ServiceError => loadFixture<ServiceError>("recompute_error.json");
export const fixtureMeta = (): { n_rows: number; pruned_request_rows: number[];
                                 error_request_rows: number[] } => loadFixture("meta.json");

/** Deterministic small PRNG (mulberry32) for synthetic row data. */
export function rng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function stubStats(labels: string[]): Stats {
  const size = labels.length;
  const matrix = Array.from({ length: size }, (_, i) =>
    Array.from({ length: size }, (_, j) => (i === j ? 1 : 0)),
  );
  return {
    si: { labels, matrix },
    ranking: {
      strategy: "exhaustive",
      max_size: 1,
      directions: { cdi_12: "bg -> sig", cdi_21: "sig -> bg" },
      entries: [],
    },
    vid: {
      nodes: labels.slice(0, -1).map((name, j) => ({
        name,
        angle: (2 * Math.PI * j) / (size - 1),
      })),
      center: labels[size - 1],
      edges: [],
      thresholds: { strong: 0.25, weak_low: 0.04, weak_high: 0.1 },
      notes: { medium_band: "toolkit-defined" },
    },
  };
}

/** In-memory bundle of nRows x nVars continuous data with a two-level class. */
export function syntheticBundle(nRows: number, nVars: number, seed = 1): Bundle {
  const random = rng(seed);
  const columns = Array.from({ length: nVars }, (_, j) => `v${j}`);
  const data: number[][] = [];
  const codes: number[] = [];
  for (let i = 0; i < nRows; i++) {
    const code = i % 2;
    codes.push(code);
    data.push(columns.map((_, j) => random() * (j + 1) + code * 0.5));
  }
  const variables = columns.map((name, j) => ({
    name,
    kind: "continuous" as const,
    min: Math.min(...data.map((r) => r[j])),
    max: Math.max(...data.map((r) => r[j])),
  }));
  const labels = [...columns, "Flag"];
  return {
    format: "infoeda-bundle",
    version: "0.1.0",
    m: 2,
    dataset: {
      n_rows: nRows,
      n_dropped: 0,
      variables,
      class: { name: "Flag", levels: ["bg", "sig"], counts: [Math.ceil(nRows / 2), Math.floor(nRows / 2)] },
    },
    rows: {
      columns,
      kinds: columns.map(() => "continuous"),
      data,
      class: "Flag",
      class_codes: codes,
      class_levels: ["bg", "sig"],
    },
    ...stubStats(labels),
  };
}

/** Fetch stub mapping URL suffixes to canned or deferred JSON responses. */
export type Responder = (body: string | undefined) => Promise<{ status: number; json: unknown }>;

export function stubFetch(routes: Record<string, Responder>) {
  return async (url: string, init?: RequestInit): Promise<Response> => {
    for (const [suffix, responder] of Object.entries(routes)) {
      if (url.endsWith(suffix)) {
        const { status, json } = await responder(init?.body as string | undefined);
        return new Response(JSON.stringify(json), {
          status,
          headers: { "Content-Type": "application/json" },
        });
      }
    }
    return new Response(JSON.stringify({ error: `no route for ${url}`, status: 404 }), {
      status: 404,
    });
  };
}
