"""Whole-dataset analysis and its serializable bundle.

The bundle is one JSON document holding the dataset summary, per-variable
binning parameters, the similarity matrix, the interaction diagram, the CDI
ranking, and the raw row payload, so an explorer client gets a consistent
snapshot: every statistic is recomputable from the rows it ships with.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from ._version import VERSION
from .binning import DEFAULT_M, Histogram1D, build_histogram, differential_entropy
from .class_distance import EXHAUSTIVE, SubsetRanking, false_alarm_bound, rank_subsets
from .dataset import CONTINUOUS, Dataset
from .diagram import VidGraph, VidThresholds, build_vid, graph_document
from .metrics import BinnedVariable, joint_entropy, similarity_index


def binned_variable(dataset: Dataset, name: str, m: float = DEFAULT_M) -> BinnedVariable:
    """Codes of one variable: histogram bins if continuous, category codes otherwise."""
    meta = dataset.variable(name)
    values = dataset.column(name)
    if meta.kind == CONTINUOUS:
        hist = build_histogram(values, m)
        return BinnedVariable.from_histogram(name, hist, values)
    return BinnedVariable.from_codes(name, values)


def bin_all(dataset: Dataset, m: float = DEFAULT_M):
    """Bin every variable plus the class column with one shared M.

    Returns (binned variables by name, histograms by name for the continuous ones).
    """
    binned: dict[str, BinnedVariable] = {}
    histograms: dict[str, Histogram1D] = {}
    names = list(dataset.variable_names)
    if dataset.class_meta is not None:
        names.append(dataset.class_meta.name)
    for name in names:
        meta = dataset.variable(name)
        values = dataset.column(name)
        if meta.kind == CONTINUOUS:
            hist = build_histogram(values, m)
            histograms[name] = hist
            binned[name] = BinnedVariable.from_histogram(name, hist, values)
        else:
            binned[name] = BinnedVariable.from_codes(name, values)
    return binned, histograms


def si_matrix(binned: dict[str, BinnedVariable], labels) -> np.ndarray:
    """Symmetric similarity matrix over the labelled variables, unit diagonal."""
    labels = list(labels)
    out = np.zeros((len(labels), len(labels)))
    for i, a in enumerate(labels):
        for j, b in enumerate(labels[: i + 1]):
            value = similarity_index(binned[a], binned[b])
            out[i, j] = out[j, i] = value
    return out


@dataclass(frozen=True, eq=False)
class AnalysisBundle:
    """Snapshot of one dataset's statistics plus the rows they came from."""

    dataset: Dataset
    m: float
    binned: dict[str, BinnedVariable]
    histograms: dict[str, Histogram1D]
    si_labels: tuple[str, ...]
    si: np.ndarray
    vid: VidGraph
    ranking: SubsetRanking

    def stats_document(self) -> dict:
        """The recomputable statistics sections (shared with serve-mode responses)."""
        part = self.dataset.partition_by_class()
        rank_entries = []
        for e in self.ranking.entries:
            rank_entries.append({
                "variables": list(e.subset),
                "arity": len(e.subset),
                "si": self._ranking_si(e.subset),
                "cdi_12": float(e.cdi_12),
                "cdi_21": float(e.cdi_21),
                "cdr": float(e.cdr),
                "bound": float(false_alarm_bound(e.cdr)),
            })
        return {
            "si": {
                "labels": list(self.si_labels),
                "matrix": [[float(x) for x in row] for row in self.si],
            },
            "vid": graph_document(self.vid),
            "ranking": {
                "strategy": self.ranking.strategy,
                "max_size": self.ranking.max_size,
                "directions": {
                    "cdi_12": f"{part.labels[0]} -> {part.labels[1]}",
                    "cdi_21": f"{part.labels[1]} -> {part.labels[0]}",
                },
                "entries": rank_entries,
            },
        }

    def _ranking_si(self, subset) -> float | None:
        """Note-1 similarity for a ranking row: vs class for singletons,
        between the pair for 2-subsets, undefined beyond that."""
        index = {name: i for i, name in enumerate(self.si_labels)}
        if len(subset) == 1 and self.dataset.class_meta is not None:
            return float(self.si[index[subset[0]], index[self.dataset.class_meta.name]])
        if len(subset) == 2:
            return float(self.si[index[subset[0]], index[subset[1]]])
        return None

    def document(self) -> dict:
        """Full JSON-ready bundle document, rows included."""
        d = self.dataset
        matrix = d.matrix
        summary_vars = []
        for j, v in enumerate(d.variables):
            summary_vars.append({
                "name": v.name,
                "kind": v.kind,
                "min": float(matrix[:, j].min()),
                "max": float(matrix[:, j].max()),
            })
        part = d.partition_by_class() if d.class_codes is not None else None
        doc = {
            "format": "infoeda-bundle",
            "version": VERSION,
            "m": float(self.m),
            "dataset": {
                "n_rows": d.n_rows,
                "n_dropped": d.n_dropped,
                "variables": summary_vars,
                "class": None if part is None else {
                    "name": d.class_meta.name,
                    "levels": list(part.labels),
                    "counts": list(part.counts),
                },
            },
            "binning": self._binning_document(),
        }
        doc.update(self.stats_document())
        doc["rows"] = {
            "columns": list(d.variable_names),
            "kinds": [v.kind for v in d.variables],
            "data": [[float(x) for x in row] for row in matrix],
            "class": None if d.class_meta is None else d.class_meta.name,
            "class_codes": None if d.class_codes is None else [int(c) for c in d.class_codes],
            "class_levels": None if d.class_levels is None else list(d.class_levels),
        }
        return doc

    def _binning_document(self) -> dict:
        out = {}
        for name in self.si_labels:
            meta = self.dataset.variable(name)
            bv = self.binned[name]
            entry = {
                "kind": meta.kind,
                "alphabet_size": bv.alphabet_size,
                "discrete_entropy": float(joint_entropy(bv)),
            }
            if meta.kind == CONTINUOUS:
                hist = self.histograms[name]
                entry.update({
                    "m": float(self.m),
                    "width": float(hist.width),
                    "origin": float(hist.origin),
                    "n_bins": hist.n_bins,
                    "differential_entropy": float(
                        differential_entropy(self.dataset.column(name)).h_bits
                    ),
                })
            out[name] = entry
        return out

    def to_bytes(self) -> bytes:
        return (json.dumps(self.document(), indent=2) + "\n").encode("utf-8")

    def write(self, path) -> None:
        with open(path, "wb") as fh:
            fh.write(self.to_bytes())


def analyze(dataset: Dataset, m: float = DEFAULT_M, max_size: int = 1,
            strategy: str = EXHAUSTIVE,
            thresholds: VidThresholds | None = None) -> AnalysisBundle:
    """Run the full pipeline: bin, similarity matrix, diagram, CDI ranking."""
    if dataset.class_meta is None:
        raise ValueError("analysis needs a class column")
    dataset.partition_by_class()  # class problems surface before binning ones
    thresholds = thresholds or VidThresholds()
    binned, histograms = bin_all(dataset, m)
    class_name = dataset.class_meta.name
    labels = tuple(dataset.variable_names) + (class_name,)
    si = si_matrix(binned, labels)
    index = {name: i for i, name in enumerate(labels)}
    si_pairs = {}
    names = dataset.variable_names
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            si_pairs[(a, b)] = float(si[index[a], index[b]])
    for a in names:
        si_pairs[(class_name, a)] = float(si[index[class_name], index[a]])
    vid = build_vid(names, si_pairs, class_name=class_name, thresholds=thresholds)
    ranking = rank_subsets(dataset, max_size=max_size, strategy=strategy)
    return AnalysisBundle(dataset=dataset, m=m, binned=binned, histograms=histograms,
                          si_labels=labels, si=si, vid=vid, ranking=ranking)


def bundle_dataset(document: dict) -> Dataset:
    """Rebuild the Dataset a bundle was computed from, using its row payload."""
    rows = document["rows"]
    return Dataset.from_arrays(
        names=rows["columns"],
        matrix=rows["data"],
        kinds=rows["kinds"],
        class_name=rows["class"],
        class_codes=rows["class_codes"],
        class_levels=rows["class_levels"],
    )
