import { describe, expect, it } from "vitest";

import { subsetHash } from "../src/hash.js";
import { fixtureMeta, fixturePruned } from "./helpers.js";

describe("subsetHash", () => {
  it("matches the service's frozen FNV-1a 64 vector", () => {
    // same vector is pinned on the Python side
    expect(subsetHash([0, 1, 2])).toBe("1c2c3ac2c828864a");
  });

  it("is order-insensitive", () => {
    expect(subsetHash([5, 3, 9, 0])).toBe(subsetHash([0, 3, 5, 9]));
  });

  it("always yields 16 hex chars", () => {
    expect(subsetHash([0])).toMatch(/^[0-9a-f]{16}$/);
    expect(subsetHash([123456789])).toMatch(/^[0-9a-f]{16}$/);
  });

  it("agrees with the hash the live service computed for the pruned fixture", () => {
    const meta = fixtureMeta();
    expect(subsetHash(meta.pruned_request_rows)).toBe(fixturePruned().subset_hash);
  });
});
