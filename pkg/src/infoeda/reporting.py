"""Plain-text and delimiter-separated tables for ranking results.

Layout follows the summary-table conventions used throughout: one row per
variable subset with its similarity value, both directional class distances,
their parallel combination, and the false-alarm floor. Similarity is shown
against the class for single variables, between the pair for two, and is
undefined ('NA') beyond that; values below the weak-link cutoff print as '-'.
"""

from __future__ import annotations

import csv
import io

from .bundle import AnalysisBundle

TEXT = "text"
CSV = "csv"

# ranked subsets shown per arity above 1 in reports
DEFAULT_TOP_PER_ARITY = 5


def _format_si(si, dash_below: float) -> str:
    if si is None:
        return "NA"
    if si < dash_below:
        return "-"
    return f"{si:.2f}"


def ranking_rows(bundle: AnalysisBundle, top_per_arity: int | None = None,
                 include_bound: bool = True) -> tuple[list[str], list[list[str]]]:
    """Header and formatted body rows of the ranking table.

    With top_per_arity set, rows group by subset size (all singletons, then
    the top-ranked subsets of each larger size); otherwise all entries appear
    in ranking order.
    """
    doc = bundle.stats_document()["ranking"]
    directions = doc["directions"]
    dash_below = bundle.vid.thresholds.weak_low
    header = ["Variables", "#", "SI",
              f"CDI({directions['cdi_12']})", f"CDI({directions['cdi_21']})", "CDR"]
    if include_bound:
        header.append("Bound")

    entries = doc["entries"]
    if top_per_arity is None:
        chosen = entries
    else:
        chosen = []
        arities = sorted({e["arity"] for e in entries})
        for arity in arities:
            group = [e for e in entries if e["arity"] == arity]
            if arity > 1:
                group = group[:top_per_arity]
            chosen.extend(group)

    rows = []
    for e in chosen:
        row = [
            "/".join(e["variables"]),
            str(e["arity"]),
            _format_si(e["si"], dash_below),
            f"{e['cdi_12']:.2f}",
            f"{e['cdi_21']:.2f}",
            f"{e['cdr']:.2f}",
        ]
        if include_bound:
            row.append(f"{e['bound']:.3f}")
        rows.append(row)
    return header, rows


def render_table(header: list[str], rows: list[list[str]], fmt: str = TEXT) -> str:
    if fmt == CSV:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return out.getvalue()
    if fmt != TEXT:
        raise ValueError(f"unknown format {fmt!r}")
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    def line(cells):
        return "  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()
    divider = "  ".join("-" * w for w in widths)
    return "\n".join([line(header), divider] + [line(r) for r in rows]) + "\n"


def generate_report(bundle: AnalysisBundle, fmt: str = TEXT,
                    top_per_arity: int = DEFAULT_TOP_PER_ARITY) -> str:
    """Full summary report: dataset header plus the grouped ranking table."""
    d = bundle.dataset
    part = d.partition_by_class()
    header, rows = ranking_rows(bundle, top_per_arity=top_per_arity)
    table = render_table(header, rows, fmt=fmt)
    if fmt == CSV:
        return table
    class_bits = ", ".join(
        f"{label}: {count}" for label, count in zip(part.labels, part.counts)
    )
    intro = [
        f"dataset: {d.n_rows} rows ({d.n_dropped} dropped at load), "
        f"{d.n_variables} variables, class {d.class_meta.name!r} ({class_bits})",
        f"M = {bundle.m:g}; strategy = {bundle.ranking.strategy}; "
        f"max subset size = {bundle.ranking.max_size}",
        "",
    ]
    return "\n".join(intro) + table
