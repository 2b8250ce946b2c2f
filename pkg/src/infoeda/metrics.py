"""Discrete entropies, mutual information, similarity index, interaction information.

All statistics operate on BinnedVariables: per-row integer codes produced
either by an entropy-calibrated histogram (continuous data) or taken directly
from categorical codes. Entropy sums run over sorted cell counts, so every
statistic here is bit-exact under argument permutation and code relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .binning import Histogram1D


@dataclass(frozen=True, eq=False)
class BinnedVariable:
    """Per-row codes of one variable, dense in [0, alphabet_size)."""

    name: str
    codes: np.ndarray
    alphabet_size: int
    n: int

    def __post_init__(self):
        self.codes.setflags(write=False)

    @classmethod
    def from_histogram(cls, name: str, histogram: Histogram1D, values) -> "BinnedVariable":
        codes = histogram.bin_indices(values)
        return cls(name=name, codes=codes, alphabet_size=histogram.n_bins, n=int(codes.size))

    @classmethod
    def from_codes(cls, name: str, codes) -> "BinnedVariable":
        """Wrap categorical codes, re-densified in sorted-value order."""
        raw = np.asarray(codes)
        if raw.ndim != 1 or raw.size == 0:
            raise ValueError("codes must be a non-empty 1-D array")
        distinct, dense = np.unique(raw, return_inverse=True)
        return cls(name=name, codes=dense.astype(np.int64),
                   alphabet_size=int(distinct.size), n=int(raw.size))


@dataclass(frozen=True, eq=False)
class ContingencyTable:
    """Joint cell counts of 1-3 row-aligned binned variables."""

    dims: tuple[int, ...]
    counts: np.ndarray
    n: int

    def __post_init__(self):
        self.counts.setflags(write=False)


def _check_aligned(variables) -> int:
    if not 1 <= len(variables) <= 3:
        raise ValueError(f"expected 1-3 variables, got {len(variables)}")
    n = variables[0].n
    for v in variables[1:]:
        if v.n != n:
            raise ValueError(
                f"row mismatch: {variables[0].name!r} has {n} rows, {v.name!r} has {v.n}"
            )
    return n


def contingency_table(*variables: BinnedVariable) -> ContingencyTable:
    """Joint counts over the product grid of the variables' alphabets."""
    n = _check_aligned(variables)
    dims = tuple(int(v.alphabet_size) for v in variables)
    flat = np.ravel_multi_index(tuple(v.codes for v in variables), dims)
    counts = np.bincount(flat, minlength=int(np.prod(dims))).reshape(dims)
    return ContingencyTable(dims=dims, counts=counts, n=n)


def discrete_entropy(counts) -> float:
    """Shannon entropy -sum(p * log2 p) of a count vector, in bits.

    Zero-count cells contribute nothing. Counts are sorted before summation,
    making the result independent of cell order at the bit level.
    """
    c = np.asarray(counts, dtype=float).ravel()
    if c.size == 0 or (c < 0).any():
        raise ValueError("counts must be a non-empty, nonnegative vector")
    total = c.sum()
    if total <= 0:
        raise ValueError("counts sum to zero")
    p = np.sort(c[c > 0]) / total
    return float(-np.sum(p * np.log2(p)))


def joint_entropy(*variables: BinnedVariable) -> float:
    """Entropy of the joint distribution of 1-3 row-aligned variables, in bits."""
    return discrete_entropy(contingency_table(*variables).counts)


def mutual_information(x: BinnedVariable, y: BinnedVariable, clamp: bool = True) -> float:
    """I(x, y) = H(x) + H(y) - H(x, y) in bits.

    The plug-in estimate is nonnegative up to floating rounding; by default
    it is clamped at zero. Pass clamp=False for the raw value.
    """
    raw = joint_entropy(x) + joint_entropy(y) - joint_entropy(x, y)
    return max(0.0, raw) if clamp else raw


def similarity_index(x: BinnedVariable, y: BinnedVariable) -> float:
    """Shared-information fraction I(x, y) / min(H(x), H(y)), in [0, 1]."""
    hx = joint_entropy(x)
    hy = joint_entropy(y)
    for h, v in ((hx, x), (hy, y)):
        if h == 0.0:
            raise ValueError(
                f"variable {v.name!r} is constant (zero entropy); similarity undefined"
            )
    return min(1.0, mutual_information(x, y) / min(hx, hy))


def interaction_information(a: BinnedVariable, b: BinnedVariable, c: BinnedVariable) -> float:
    """Signed 3-way interaction information, in bits.

    H(a)+H(b)+H(c) - H(a,b) - H(a,c) - H(b,c) + H(a,b,c), evaluated literally
    (co-information convention: redundancy positive, synergy negative).
    """
    singles = sorted((joint_entropy(a), joint_entropy(b), joint_entropy(c)))
    pairs = sorted((joint_entropy(a, b), joint_entropy(a, c), joint_entropy(b, c)))
    return sum(singles) - sum(pairs) + joint_entropy(a, b, c)
