import pytest

from icolor import (EdgeColoring, build_graph, decide_t, family,
                    reverse_coloring, verify_interval, vertex_palette)


def coloring_for_cycle4(cols):
    # C4 canonical edges: (0,1), (0,3), (1,2), (2,3); map from the walk order
    # e01, e12, e23, e30 used in the examples
    walk_to_canonical = {(0, 1): 0, (1, 2): 1, (2, 3): 2, (0, 3): 3}
    out = [0] * 4
    out[0] = cols[0]
    out[2] = cols[1]
    out[3] = cols[2]
    out[1] = cols[3]
    return EdgeColoring(tuple(out))


class TestVerifier:
    def test_c4_three_colors_valid(self):
        G = family("cycle", 4)
        v = verify_interval(G, coloring_for_cycle4((1, 2, 3, 2)))
        assert v.valid and v.t == 3

    def test_c4_two_colors_valid(self):
        G = family("cycle", 4)
        v = verify_interval(G, coloring_for_cycle4((1, 2, 1, 2)))
        assert v.valid and v.t == 2

    def test_p3_gap_invalid(self):
        G = family("path", 3)
        v = verify_interval(G, EdgeColoring((1, 3)))
        assert not v.valid
        kinds = {x.kind for x in v.violations}
        assert "not_interval" in kinds and "color_gap" in kinds

    def test_not_proper_reported_at_vertex(self):
        G = family("star", 2)
        v = verify_interval(G, EdgeColoring((1, 1)))
        assert not v.valid
        assert any(x.kind == "not_proper" and x.site == 0 for x in v.violations)

    def test_min_not_one(self):
        G = family("path", 3)
        v = verify_interval(G, EdgeColoring((2, 3)))
        assert not v.valid
        assert any(x.kind == "min_not_one" for x in v.violations)

    def test_all_violations_enumerated(self):
        G = family("cycle", 4)
        v = verify_interval(G, EdgeColoring((2, 2, 4, 4)))
        assert len(v.violations) >= 3

    def test_declared_t_gap(self):
        G = family("path", 2)
        v = verify_interval(G, EdgeColoring((1,), declared_t=2))
        assert not v.valid
        assert any(x.kind == "color_gap" and x.site == 2 for x in v.violations)

    def test_length_mismatch_is_error(self):
        with pytest.raises(ValueError, match="colors for"):
            verify_interval(family("cycle", 4), EdgeColoring((1, 2)))

    def test_interval_condition_implies_proper_never_disagrees(self, catalog):
        # whenever every vertex has exactly degree-many consecutive colors,
        # no properness violation can coexist
        for G in catalog.values():
            res = decide_t(G, max(G.degrees) if G.m else 1)
            if res.status != "feasible":
                continue
            v = verify_interval(G, res.witness)
            assert v.valid

    def test_valid_t_at_least_delta(self, catalog, prism):
        for G in list(catalog.values()) + [prism]:
            res = decide_t(G, max(G.degrees))
            if res.status == "feasible":
                assert verify_interval(G, res.witness).t >= max(G.degrees)


class TestVertexPalette:
    def test_c4_palette(self):
        G = family("cycle", 4)
        c = coloring_for_cycle4((1, 2, 3, 2))
        p = vertex_palette(G, c, 2)  # vertex between walk edges e12 and e23
        assert p.colors == frozenset({2, 3}) and p.is_interval

    def test_star_center(self):
        G = family("star", 3)
        p = vertex_palette(G, EdgeColoring((1, 2, 3)), 0)
        assert p.colors == frozenset({1, 2, 3})
        assert (p.lo, p.hi, p.is_interval) == (1, 3, True)

    def test_p3_middle_not_interval(self):
        G = family("path", 3)
        p = vertex_palette(G, EdgeColoring((1, 3)), 1)
        assert p.colors == frozenset({1, 3}) and not p.is_interval

    def test_isolated_vertex(self):
        G = build_graph(3, [(0, 1)])
        p = vertex_palette(G, EdgeColoring((1,)), 2)
        assert p.colors == frozenset() and p.is_interval


class TestReverse:
    def test_examples(self):
        assert reverse_coloring(EdgeColoring((1, 2, 3, 2)), 3).colors == (3, 2, 1, 2)
        assert reverse_coloring(EdgeColoring((1,)), 1).colors == (1,)
        assert reverse_coloring(EdgeColoring((2, 1)), 4).colors == (3, 4)

    def test_color_above_t_rejected(self):
        with pytest.raises(ValueError):
            reverse_coloring(EdgeColoring((3,)), 2)

    def test_involution(self):
        c = EdgeColoring((1, 4, 2, 3))
        assert reverse_coloring(reverse_coloring(c, 4), 4).colors == c.colors

    def test_preserves_validity_on_witnesses(self, catalog, prism):
        for G in list(catalog.values()) + [prism]:
            for t in range(max(G.degrees), G.m + 1):
                res = decide_t(G, t)
                if res.status != "feasible":
                    continue
                v = verify_interval(G, res.witness)
                assert v.valid
                rev = reverse_coloring(res.witness, v.t)
                vr = verify_interval(G, rev)
                assert vr.valid and vr.t == v.t
