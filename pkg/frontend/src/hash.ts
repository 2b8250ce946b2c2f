/** FNV-1a 64-bit digest of a row-index subset, matching the service's echo.
 *
 * The canonical form is the comma-joined, ascending list of indices; the
 * digest is the 16-hex-char FNV-1a 64 of its ASCII bytes.
 */

const FNV_OFFSET = 0xcbf29ce484222325n;
const FNV_PRIME = 0x100000001b3n;
const MASK64 = (1n << 64n) - 1n;

export function subsetHash(indices: Iterable<number>): string {
  const sorted = [...indices].sort((a, b) => a - b);
  const text = sorted.join(",");
  let acc = FNV_OFFSET;
  for (let i = 0; i < text.length; i++) {
    acc ^= BigInt(text.charCodeAt(i));
    acc = (acc * FNV_PRIME) & MASK64;
  }
  return acc.toString(16).padStart(16, "0");
}
