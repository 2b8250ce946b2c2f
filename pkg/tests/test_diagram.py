import json

import numpy as np
import pytest

from infoeda import (
    BinnedVariable,
    VidThresholds,
    build_vid,
    export_vid,
    similarity_index,
)
from infoeda.diagram import BAND_MEDIUM, BAND_STRONG, BAND_WEAK


def full_pairs(variables, value, class_name=None):
    pairs = {}
    for i, a in enumerate(variables):
        for b in variables[i + 1:]:
            pairs[(a, b)] = value
    if class_name:
        for v in variables:
            pairs[(class_name, v)] = value
    return pairs


class TestThresholds:
    def test_defaults_valid(self):
        t = VidThresholds()
        assert (t.strong, t.weak_low, t.weak_high) == (0.25, 0.04, 0.10)

    @pytest.mark.parametrize("kwargs", [
        {"weak_low": 0.0},
        {"weak_low": 0.2, "weak_high": 0.1},
        {"strong": 0.05},
        {"strong": 1.5},
    ])
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ValueError):
            VidThresholds(**kwargs)

    def test_band_edges(self):
        t = VidThresholds()
        assert t.band(0.30) == BAND_STRONG
        assert t.band(0.25) == BAND_MEDIUM  # strong requires strictly above
        assert t.band(0.10) == BAND_MEDIUM  # weak band is open at both ends
        assert t.band(0.07) == BAND_WEAK
        assert t.band(0.04) == BAND_MEDIUM


class TestBuildVid:
    def test_all_zero_similarity_gives_no_edges(self):
        g = build_vid(["a", "b", "c"], full_pairs(["a", "b", "c"], 0.0, "k"),
                      class_name="k")
        assert len(g.nodes) == 3
        assert g.center == "k"
        assert g.edges == ()

    def test_computed_copy_pair_is_strong(self):
        rng = np.random.default_rng(0)
        codes = rng.integers(0, 6, 1_000)
        x = BinnedVariable.from_codes("x", codes)
        y = BinnedVariable.from_codes("y", codes)
        z = BinnedVariable.from_codes("z", rng.integers(0, 6, 1_000))
        pairs = {
            ("x", "y"): similarity_index(x, y),
            ("x", "z"): similarity_index(x, z),
            ("y", "z"): similarity_index(y, z),
        }
        g = build_vid(["x", "y", "z"], pairs)
        strong = [e for e in g.edges if e.band == BAND_STRONG]
        assert len(strong) == 1
        assert {strong[0].a, strong[0].b} == {"x", "y"}
        assert strong[0].si == 1.0

    def test_node_angles_evenly_spaced(self):
        names = ["a", "b", "c", "d"]
        g = build_vid(names, full_pairs(names, 0.0))
        angles = [n.angle for n in g.nodes]
        assert angles == pytest.approx([0.0, np.pi / 2, np.pi, 3 * np.pi / 2])

    def test_missing_pair_rejected(self):
        pairs = full_pairs(["a", "b", "c"], 0.5)
        del pairs[("a", "c")]
        with pytest.raises(ValueError, match="missing"):
            build_vid(["a", "b", "c"], pairs)

    def test_out_of_range_si_rejected(self):
        pairs = full_pairs(["a", "b"], 1.2)
        with pytest.raises(ValueError, match="out of"):
            build_vid(["a", "b"], pairs)

    def test_raising_weak_low_only_removes_edges(self):
        rng = np.random.default_rng(1)
        names = ["a", "b", "c", "d", "e"]
        pairs = {k: float(v) for k, v in
                 zip(full_pairs(names, 0.0), rng.random(10))}
        lows = [0.02, 0.05, 0.10, 0.20]
        edge_sets = []
        for low in lows:
            t = VidThresholds(weak_low=low, weak_high=0.21, strong=0.25)
            g = build_vid(names, pairs, thresholds=t)
            edge_sets.append({(e.a, e.b) for e in g.edges})
        for smaller, larger in zip(edge_sets[1:], edge_sets):
            assert smaller <= larger

    def test_node_count_independent_of_edges(self):
        names = ["a", "b", "c"]
        g0 = build_vid(names, full_pairs(names, 0.0))
        g1 = build_vid(names, full_pairs(names, 0.9))
        assert len(g0.nodes) == len(g1.nodes) == 3

    def test_class_cannot_sit_on_circle(self):
        with pytest.raises(ValueError, match="class"):
            build_vid(["a", "k"], full_pairs(["a", "k"], 0.1, "k"), class_name="k")

    def test_class_links_start_at_center(self):
        names = ["a", "b"]
        g = build_vid(names, full_pairs(names, 0.5, "k"), class_name="k")
        class_edges = [e for e in g.edges if e.a == "k"]
        assert len(class_edges) == 2


class TestExportVid:
    def make_graph(self, si=0.5):
        names = ["a", "b", "c"]
        return build_vid(names, full_pairs(names, si, "k"), class_name="k")

    def test_structured_round_trip(self):
        g = self.make_graph()
        doc = json.loads(export_vid(g, "structured"))
        assert [n["name"] for n in doc["nodes"]] == ["a", "b", "c"]
        assert doc["center"] == "k"
        assert len(doc["edges"]) == 6
        assert doc["thresholds"]["strong"] == 0.25
        assert "medium" in doc["notes"]["medium_band"]

    def test_structured_empty_edges(self):
        g = self.make_graph(si=0.0)
        doc = json.loads(export_vid(g, "structured"))
        assert doc["edges"] == []
        assert len(doc["nodes"]) == 3

    def test_structured_deterministic(self):
        g = self.make_graph()
        assert export_vid(g, "structured") == export_vid(g, "structured")

    def test_vector_image_chord(self):
        pairs = {("a", "b"): 0.5}
        g = build_vid(["a", "b"], pairs)
        svg = export_vid(g, "vector-image").decode()
        assert svg.startswith("<svg")
        assert svg.count("<line") == 1

    def test_vector_image_band_styles(self):
        names = ["a", "b", "c"]
        pairs = {("a", "b"): 0.5, ("a", "c"): 0.07, ("b", "c"): 0.15}
        svg = export_vid(build_vid(names, pairs), "vector-image").decode()
        assert "stroke-dasharray" in svg  # weak edge is dashed
        assert 'stroke-width="2.4"' in svg  # strong edge is heavy
        assert 'stroke-width="0.8"' in svg  # medium edge is thin

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError, match="unknown export format"):
            export_vid(self.make_graph(), "png")
