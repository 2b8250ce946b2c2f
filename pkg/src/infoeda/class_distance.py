"""Two-class distance estimation over variable subsets.

The class distance indicator (CDI) is a nearest-neighbour estimate of the
Kullback-Leibler divergence between the two class distributions, in bits:

    CDI(1,2) = (k/n1) * sum_i log2(cross_i / within_i) + log2(n2 / (n1 - 1))

where within_i is the smallest strictly positive Euclidean distance from
point i of cloud 1 to any other cloud-1 point and cross_i its counterpart
against cloud 2. The CDR parallel combination of the two directions feeds the
false-alarm floor 2^(-CDI) that no classifier can beat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.spatial import cKDTree

from .dataset import Dataset, standardize

EXHAUSTIVE = "exhaustive"
GREEDY = "greedy"

# exhaustive enumeration refuses more variables than this; use greedy instead
ENUMERATION_CAP = 20


@dataclass(frozen=True, eq=False)
class PointCloud:
    """Standardized coordinates of one class's rows over a variable subset."""

    points: np.ndarray
    subset: tuple[str, ...]
    class_code: int

    def __post_init__(self):
        self.points.setflags(write=False)
        if self.points.ndim != 2:
            raise ValueError("points must be an n x k matrix")
        n, k = self.points.shape
        if n < 2 or k < 1 or k != len(self.subset):
            raise ValueError(
                f"cloud for {self.subset} needs n >= 2 and k = {len(self.subset)} columns"
            )
        if not np.isfinite(self.points).all():
            raise ValueError("cloud coordinates must be finite")

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def k(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class CdiResult:
    """Directional divergences and their parallel combination for one subset."""

    subset: tuple[str, ...]
    cdi_12: float
    cdi_21: float
    cdr: float
    n1: int
    n2: int


@dataclass(frozen=True)
class SubsetRanking:
    entries: tuple[CdiResult, ...]
    strategy: str
    max_size: int


def _positive_nn_distances(tree: cKDTree, tree_size: int, queries: np.ndarray,
                           skip_self: bool, what: str) -> np.ndarray:
    """Smallest strictly positive distance from each query to the tree's points.

    skip_self assumes every query point is itself in the tree. Duplicate
    points are stepped over by widening the query until a positive distance
    appears; a query matching every tree point raises.
    """
    k0 = 2 if skip_self else 1
    dist, _ = tree.query(queries, k=[k0])
    out = dist[:, 0].astype(float)
    pending = np.flatnonzero(out <= 0.0)
    k = k0
    while pending.size:
        k = min(2 * k + 2, tree_size)
        dist, _ = tree.query(queries[pending], k=k)
        dist = np.atleast_2d(dist)
        positive = np.where(dist > 0.0, dist, np.inf).min(axis=1)
        out[pending] = positive
        unresolved = ~np.isfinite(positive)
        if k >= tree_size:
            if unresolved.any():
                raise ValueError(f"complete duplication: {what}")
            break
        pending = pending[unresolved]
    return out


def cdi(cloud1: PointCloud, cloud2: PointCloud) -> float:
    """Directional class distance CDI(1,2) in bits.

    Both clouds must share the subset and live in the same standardized
    coordinate frame. Exact nearest-neighbour search; per-point terms are
    summed in sorted order so row permutations cannot change the result.
    """
    if cloud1.subset != cloud2.subset:
        raise ValueError(
            f"subset mismatch: {cloud1.subset} vs {cloud2.subset}"
        )
    points1, points2 = cloud1.points, cloud2.points
    n1, k = points1.shape
    n2 = points2.shape[0]
    within = _positive_nn_distances(
        cKDTree(points1), n1, points1, skip_self=True,
        what=f"a point of class {cloud1.class_code} duplicates all of its class over {cloud1.subset}",
    )
    cross = _positive_nn_distances(
        cKDTree(points2), n2, points1, skip_self=False,
        what=f"a point of class {cloud1.class_code} duplicates every point of class "
             f"{cloud2.class_code} over {cloud1.subset}",
    )
    # log of the ratio, not the difference of logs: a global scale factor then
    # cancels before the log is taken, keeping the estimate scale invariant
    terms = np.sort(np.log2(cross / within))
    return (k / n1) * float(terms.sum()) + math.log2(n2 / (n1 - 1))


def cdr(d12: float, d21: float) -> float:
    """Parallel combination 1/CDR = 1/d12 + 1/d21, zero if either input is <= 0."""
    if not (math.isfinite(d12) and math.isfinite(d21)):
        raise ValueError("CDI inputs must be finite")
    if d12 <= 0.0 or d21 <= 0.0:
        return 0.0
    if d12 == d21:
        return d12 / 2.0
    return d12 * d21 / (d12 + d21)


def false_alarm_bound(cdi_bits: float) -> float:
    """Floor 2^(-CDI) on the false-alarm probability of any classifier."""
    if cdi_bits < 0:
        raise ValueError(f"CDI must be nonnegative, got {cdi_bits}")
    return 2.0 ** (-cdi_bits)


def max_information(n: int, m: float, p: int) -> float:
    """Information ceiling p * (1/M) * log2(n) bits, before shared-information losses."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not m > 1.0:
        raise ValueError(f"M must be > 1, got {m}")
    if p < 1:
        raise ValueError(f"need p >= 1 variates, got {p}")
    return p * math.log2(n) / m


def class_clouds(dataset: Dataset, subset) -> tuple[PointCloud, PointCloud]:
    """Standardized two-class point clouds over a variable subset.

    Standardization (z-scores) is fitted on the pooled two-class data so both
    clouds share one coordinate frame.
    """
    partition = dataset.partition_by_class()
    if partition.n_classes != 2:
        raise ValueError(
            f"class distance needs exactly 2 classes, got {partition.n_classes}"
        )
    subset = tuple(subset)
    pooled = dataset.columns(subset)
    z, _, _ = standardize(pooled)
    r1, r2 = partition.row_indices
    return (
        PointCloud(points=z[r1], subset=subset, class_code=partition.codes[0]),
        PointCloud(points=z[r2], subset=subset, class_code=partition.codes[1]),
    )


def evaluate_subset(dataset: Dataset, subset) -> CdiResult:
    """Both CDI directions and the CDR for one variable subset."""
    cloud1, cloud2 = class_clouds(dataset, subset)
    d12 = cdi(cloud1, cloud2)
    d21 = cdi(cloud2, cloud1)
    return CdiResult(subset=tuple(subset), cdi_12=d12, cdi_21=d21,
                     cdr=cdr(d12, d21), n1=cloud1.n, n2=cloud2.n)


def _sorted_entries(entries) -> tuple[CdiResult, ...]:
    return tuple(sorted(entries, key=lambda e: (-e.cdr, e.subset)))


def rank_subsets(dataset: Dataset, max_size: int,
                 strategy: str = EXHAUSTIVE) -> SubsetRanking:
    """Rank variable subsets of size <= max_size by descending CDR.

    Exhaustive mode evaluates every nonempty subset (refused above
    ENUMERATION_CAP variables); greedy mode scores all singletons, then grows
    the best subset one best-CDR variable at a time. Ties break on the
    lexicographic order of subset names.
    """
    partition = dataset.partition_by_class()
    if partition.n_classes != 2:
        raise ValueError(
            f"ranking needs exactly 2 classes, got {partition.n_classes}"
        )
    names = dataset.variable_names
    p = len(names)
    if not 1 <= max_size <= p:
        raise ValueError(f"max_size must be in [1, {p}], got {max_size}")

    if strategy == EXHAUSTIVE:
        if p > ENUMERATION_CAP:
            raise ValueError(
                f"exhaustive enumeration refused for {p} > {ENUMERATION_CAP} variables; "
                "use the greedy strategy"
            )
        entries = [
            evaluate_subset(dataset, subset)
            for size in range(1, max_size + 1)
            for subset in combinations(names, size)
        ]
    elif strategy == GREEDY:
        entries = [evaluate_subset(dataset, (name,)) for name in names]
        best = min(entries, key=lambda e: (-e.cdr, e.subset))
        current = best.subset
        while len(current) < max_size:
            # keep subsets in dataset variable order so results are stable
            candidates = [
                evaluate_subset(dataset, tuple(n for n in names if n in {*current, name}))
                for name in names if name not in current
            ]
            entries.extend(candidates)
            current = min(candidates, key=lambda e: (-e.cdr, e.subset)).subset
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    return SubsetRanking(entries=_sorted_entries(entries),
                         strategy=strategy, max_size=max_size)
