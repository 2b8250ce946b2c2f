"""Variable interaction diagram: variables on a circle, class centered,
edges weighted by similarity index and bucketed into strength bands."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

STRUCTURED = "structured"
VECTOR_IMAGE = "vector-image"

BAND_STRONG = "strong"
BAND_MEDIUM = "medium"
BAND_WEAK = "weak"

# the medium band (between weak_high and strong) is this toolkit's own
# convention; only the strong and weak bands are standard
MEDIUM_BAND_NOTE = (
    "band 'medium' is a toolkit-defined bucket for similarity values between "
    "the weak and strong cutoffs"
)


@dataclass(frozen=True)
class VidThresholds:
    strong: float = 0.25
    weak_low: float = 0.04
    weak_high: float = 0.10

    def __post_init__(self):
        if not (0.0 < self.weak_low < self.weak_high <= self.strong <= 1.0):
            raise ValueError(
                "thresholds must satisfy 0 < weak_low < weak_high <= strong <= 1, "
                f"got weak_low={self.weak_low}, weak_high={self.weak_high}, "
                f"strong={self.strong}"
            )

    def band(self, si: float) -> str:
        if si > self.strong:
            return BAND_STRONG
        if self.weak_low < si < self.weak_high:
            return BAND_WEAK
        return BAND_MEDIUM


@dataclass(frozen=True)
class VidNode:
    name: str
    angle: float


@dataclass(frozen=True)
class VidEdge:
    a: str
    b: str
    si: float
    band: str


@dataclass(frozen=True)
class VidGraph:
    nodes: tuple[VidNode, ...]
    center: str | None
    edges: tuple[VidEdge, ...]
    thresholds: VidThresholds


def _pair_key(a: str, b: str) -> frozenset:
    return frozenset((a, b))


def build_vid(variables, si_pairs, class_name: str | None = None,
              thresholds: VidThresholds | None = None) -> VidGraph:
    """Assemble the diagram from pairwise similarity values.

    ``si_pairs`` maps unordered name pairs (any 2-tuple orientation) to SI
    values and must cover every variable pair plus, when a class is named,
    every variable-class link. Edges keep only pairs with SI >= weak_low.
    Node j of P sits at angle 2*pi*j/P, counter-clockwise from angle 0.
    """
    thresholds = thresholds or VidThresholds()
    variables = list(variables)
    if not variables:
        raise ValueError("need at least one variable")
    if class_name is not None and class_name in variables:
        raise ValueError("class variable cannot also appear on the circle")

    lookup = {}
    for key, si in si_pairs.items():
        a, b = key
        lookup[_pair_key(a, b)] = float(si)

    wanted = [(a, b) for i, a in enumerate(variables) for b in variables[i + 1:]]
    if class_name is not None:
        wanted += [(class_name, v) for v in variables]
    missing = [pair for pair in wanted if _pair_key(*pair) not in lookup]
    if missing:
        raise ValueError(f"missing similarity for pairs: {missing[:5]}")
    for pair in wanted:
        si = lookup[_pair_key(*pair)]
        if not 0.0 <= si <= 1.0:
            raise ValueError(f"similarity for {pair} out of [0, 1]: {si}")

    p = len(variables)
    nodes = tuple(
        VidNode(name=name, angle=2.0 * math.pi * j / p)
        for j, name in enumerate(variables)
    )
    edges = tuple(
        VidEdge(a=a, b=b, si=lookup[_pair_key(a, b)],
                band=thresholds.band(lookup[_pair_key(a, b)]))
        for a, b in wanted
        if lookup[_pair_key(a, b)] >= thresholds.weak_low
    )
    return VidGraph(nodes=nodes, center=class_name, edges=edges, thresholds=thresholds)


def graph_document(graph: VidGraph) -> dict:
    """JSON-ready structured form of the diagram."""
    return {
        "nodes": [{"name": n.name, "angle": n.angle} for n in graph.nodes],
        "center": graph.center,
        "edges": [
            {"a": e.a, "b": e.b, "si": e.si, "band": e.band} for e in graph.edges
        ],
        "thresholds": {
            "strong": graph.thresholds.strong,
            "weak_low": graph.thresholds.weak_low,
            "weak_high": graph.thresholds.weak_high,
        },
        "notes": {"medium_band": MEDIUM_BAND_NOTE},
    }


def export_vid(graph: VidGraph, format: str = STRUCTURED) -> bytes:
    """Serialize the diagram: 'structured' (JSON) or 'vector-image' (SVG)."""
    if format == STRUCTURED:
        return (json.dumps(graph_document(graph), indent=2) + "\n").encode("utf-8")
    if format == VECTOR_IMAGE:
        return _render_svg(graph).encode("utf-8")
    raise ValueError(f"unknown export format {format!r}")


_EDGE_STYLE = {
    BAND_STRONG: 'stroke="#1a1a1a" stroke-width="2.4"',
    BAND_MEDIUM: 'stroke="#555555" stroke-width="0.8"',
    BAND_WEAK: 'stroke="#1a1a1a" stroke-width="1.2" stroke-dasharray="5 4"',
}


def _render_svg(graph: VidGraph, radius: float = 100.0) -> str:
    pad = 40.0
    size = 2 * (radius + pad)
    cx = cy = radius + pad

    def xy(angle: float, r: float = radius) -> tuple[float, float]:
        # screen y points down; negate the sine so angles run counter-clockwise
        return cx + r * math.cos(angle), cy - r * math.sin(angle)

    pos = {n.name: xy(n.angle) for n in graph.nodes}
    if graph.center is not None:
        pos[graph.center] = (cx, cy)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size:g} {size:g}">',
        f'<circle cx="{cx:g}" cy="{cy:g}" r="{radius:g}" fill="none" '
        'stroke="#cccccc" stroke-width="0.6"/>',
    ]
    for e in graph.edges:
        (x1, y1), (x2, y2) = pos[e.a], pos[e.b]
        lines.append(
            f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
            f'{_EDGE_STYLE[e.band]}><title>{e.a}-{e.b} SI={e.si:.3f}</title></line>'
        )
    for n in graph.nodes:
        x, y = pos[n.name]
        lx, ly = xy(n.angle, radius + 12.0)
        anchor = "start" if math.cos(n.angle) >= 0.05 else (
            "end" if math.cos(n.angle) <= -0.05 else "middle")
        lines.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3.5" fill="#20639b"/>')
        lines.append(
            f'<text x="{lx:.3f}" y="{ly:.3f}" font-size="9" '
            f'font-family="sans-serif" text-anchor="{anchor}" '
            f'dominant-baseline="middle">{n.name}</text>'
        )
    if graph.center is not None:
        lines.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="4.5" fill="#b02e2e"/>')
        lines.append(
            f'<text x="{cx:g}" y="{cy + 14:g}" font-size="9" font-family="sans-serif" '
            f'text-anchor="middle" dominant-baseline="middle">{graph.center}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
