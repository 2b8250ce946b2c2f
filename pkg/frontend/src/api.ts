/** Service client: bundle fetch and recompute round-trips.
 *
 * At most one recompute is considered live at a time; a newer request
 * supersedes an older one, and the caller additionally checks the response's
 * subset hash against the current view before applying it.
 */

import { subsetHash } from "./hash.js";
import type { Bundle, RecomputeResponse, ServiceError } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceRejection extends Error {
  readonly status: number;
  readonly subsetHash?: string;

  constructor(payload: ServiceError) {
    super(payload.error);
    this.status = payload.status;
    this.subsetHash = payload.subset_hash;
  }
}

export class BundleClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;
  private liveHash: string | null = null;

  constructor(base = "", fetchImpl: FetchLike = (url, init) => fetch(url, init)) {
    this.base = base.replace(/\/$/, "");
    this.fetchImpl = fetchImpl;
  }

  async fetchBundle(): Promise<Bundle> {
    const resp = await this.fetchImpl(`${this.base}/bundle`);
    if (!resp.ok) {
      throw new Error(`bundle fetch failed: HTTP ${resp.status}`);
    }
    return (await resp.json()) as Bundle;
  }

  /**
   * Request statistics for the surviving rows. Resolves to null when a newer
   * recompute superseded this one while it was in flight; throws
   * ServiceRejection for structured 4xx answers.
   */
  async recompute(rows: number[]): Promise<RecomputeResponse | null> {
    const hash = subsetHash(rows);
    this.liveHash = hash;
    const resp = await this.fetchImpl(`${this.base}/recompute`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ rows }),
    });
    if (this.liveHash !== hash) return null; // superseded while in flight
    if (!resp.ok) {
      const payload = (await resp.json()) as ServiceError;
      throw new ServiceRejection(payload);
    }
    const doc = (await resp.json()) as RecomputeResponse;
    if (this.liveHash !== hash) return null;
    return doc;
  }
}
