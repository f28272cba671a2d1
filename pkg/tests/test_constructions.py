import pytest

from icolor import (EdgeColoring, GraphError, build_graph, combine_cartesian,
                    double_regular, family, hypercube_max, konig_decompose,
                    lex_blocks, round_robin, strong_blocks,
                    strong_tensor_blocks, summary, tensor_blocks,
                    verify_interval)
from icolor.constructions import BlockPlan

ONE = EdgeColoring((1,), declared_t=1)


@pytest.fixture(scope="module")
def witnesses(catalog):
    """Solver witnesses at every feasible color count for the catalog."""
    out = {}
    for name, G in catalog.items():
        s = summary(G)
        out[name] = (G, s)
    return out


class TestKonig:
    @pytest.mark.parametrize("kind,n,r", [("cycle", 4, 2), ("cycle", 6, 2)])
    def test_even_cycles(self, kind, n, r):
        B = family(kind, n)
        ms = konig_decompose(B)
        assert len(ms) == r
        self._check_partition(B, ms)

    def test_k33(self):
        B = build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)], "K33")
        ms = konig_decompose(B)
        assert len(ms) == 3
        self._check_partition(B, ms)

    def test_not_bipartite_rejected(self):
        with pytest.raises(GraphError, match="bipartite"):
            konig_decompose(family("cycle", 5))

    def test_not_regular_rejected(self):
        with pytest.raises(GraphError, match="regular"):
            konig_decompose(family("path", 3))

    def test_deterministic(self):
        B = family("cycle", 6)
        assert konig_decompose(B) == konig_decompose(B)

    @staticmethod
    def _check_partition(B, ms):
        seen = []
        for m in ms:
            covered = [v for e in m for v in e]
            assert sorted(covered) == list(range(B.n))  # perfect
            seen.extend(m)
        assert sorted(seen) == sorted(B.edges)  # partition


class TestRoundRobin:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_interval_with_2n_minus_1(self, n):
        G, c = round_robin(n)
        v = verify_interval(G, c)
        assert v.valid and v.t == max(2 * n - 1, 1)
        assert G.n == 2 * n

    def test_golden_k4(self):
        # frozen output guards the circle-method ordering
        _, c = round_robin(2)
        assert c.colors == (2, 3, 1, 1, 3, 2)

    def test_bad_n(self):
        with pytest.raises(ValueError):
            round_robin(0)


class TestCombineCartesian:
    def test_k2_k2(self):
        P, c = combine_cartesian(family("complete", 2), ONE, family("complete", 2), ONE)
        assert verify_interval(P, c).t == 2

    def test_invalid_input_rejected(self):
        K2 = family("complete", 2)
        with pytest.raises(ValueError, match="invalid"):
            combine_cartesian(K2, EdgeColoring((2,)), K2, ONE)

    def test_exact_sum_on_catalog(self, witnesses):
        for gname in ["P3", "C4", "K4"]:
            for hname in ["P2", "C6", "K4"]:
                G, sg = witnesses[gname]
                H, sh = witnesses[hname]
                for ta, tb in [(sg.w, sh.w), (sg.W, sh.W), (sg.w, sh.W)]:
                    P, c = combine_cartesian(G, sg.witnesses[ta], H, sh.witnesses[tb])
                    assert verify_interval(P, c).t == ta + tb


class TestDoubleRegular:
    def test_k2_gives_q2_three(self):
        P, c = double_regular(family("complete", 2), ONE)
        assert verify_interval(P, c).t == 3

    def test_q2_gives_q3_six(self):
        Q2 = family("hypercube", 2)
        s = summary(Q2)
        P, c = double_regular(Q2, s.witnesses[3])
        assert verify_interval(P, c).t == 6

    def test_k4_gives_eight(self):
        K4 = family("complete", 4)
        P, c = double_regular(K4, summary(K4).witnesses[4])
        assert verify_interval(P, c).t == 8

    def test_irregular_rejected(self):
        with pytest.raises(GraphError, match="regular"):
            double_regular(family("path", 3), EdgeColoring((1, 2)))

    def test_increment_over_catalog(self, witnesses):
        for name in ["P2", "C4", "C6", "K4"]:
            G, s = witnesses[name]
            r = G.degree(0)
            for t in sorted(s.feasible_t):
                P, c = double_regular(G, s.witnesses[t])
                assert verify_interval(P, c).t == t + r + 1


class TestHypercubeMax:
    @pytest.mark.parametrize("n,t", [(1, 1), (3, 6), (4, 10), (6, 21)])
    def test_color_counts(self, n, t):
        G, c = hypercube_max(n)
        v = verify_interval(G, c)
        assert v.valid and v.t == t
        assert G.edges == family("hypercube", n).edges


class TestBlocks:
    def test_tensor_k2_c3_two_colors(self):
        P, c = tensor_blocks(family("complete", 2), ONE, family("cycle", 3))
        assert verify_interval(P, c).t == 2

    def test_tensor_spec_cases(self):
        P3 = family("path", 3)
        P, c = tensor_blocks(P3, EdgeColoring((1, 2)), family("cycle", 4))
        assert verify_interval(P, c).t == 4
        P, c = tensor_blocks(family("complete", 2), ONE, family("complete", 4))
        assert verify_interval(P, c).t == 3

    def test_strong_tensor_spec_cases(self):
        K2 = family("complete", 2)
        assert verify_interval(*strong_tensor_blocks(K2, ONE, K2)).t == 2
        assert verify_interval(*strong_tensor_blocks(K2, ONE, family("cycle", 3))).t == 3
        P, c = strong_tensor_blocks(family("path", 3), EdgeColoring((1, 2)), family("cycle", 4))
        assert verify_interval(P, c).t == 6

    def test_strong_spec_cases(self):
        K2 = family("complete", 2)
        assert verify_interval(*strong_blocks(K2, ONE, K2)).t == 3
        assert verify_interval(*strong_blocks(K2, ONE, family("cycle", 4))).t == 5
        P, c = strong_blocks(family("path", 3), EdgeColoring((1, 2)), family("cycle", 4))
        assert verify_interval(P, c).t == 8

    def test_strong_class2_factor_fails_fast(self):
        with pytest.raises(GraphError, match="class-1"):
            strong_blocks(family("complete", 2), ONE, family("cycle", 3))

    def test_lex_spec_cases(self):
        K2 = family("complete", 2)
        assert verify_interval(*lex_blocks(K2, ONE, family("empty", 3))).t == 3
        P, c = lex_blocks(family("path", 3), EdgeColoring((1, 2)), family("empty", 2))
        assert verify_interval(P, c).t == 4
        assert verify_interval(*lex_blocks(K2, ONE, family("cycle", 4))).t == 6

    def test_lex_supplied_beta(self):
        K2 = family("complete", 2)
        C4 = family("cycle", 4)
        beta = EdgeColoring((1, 2, 2, 1))
        assert verify_interval(*lex_blocks(K2, ONE, C4, beta=beta)).t == 6

    def test_improper_beta_rejected(self):
        K2 = family("complete", 2)
        C4 = family("cycle", 4)
        with pytest.raises(ValueError, match="proper"):
            strong_blocks(K2, ONE, C4, beta=EdgeColoring((1, 1, 2, 2)))

    def test_irregular_h_rejected(self):
        with pytest.raises(GraphError, match="regular"):
            tensor_blocks(family("complete", 2), ONE, family("path", 3))

    def test_trace_plan(self):
        trace: list[BlockPlan] = []
        P, c = tensor_blocks(family("complete", 2), ONE, family("cycle", 4), trace=trace)
        assert len(trace) == 1
        plan = trace[0]
        assert plan.window == (1, 2)
        flat = sorted(pair for mt in plan.matchings for pair in mt)
        assert flat == sorted(P.edges)

    def test_deterministic_output(self):
        args = (family("path", 3), EdgeColoring((1, 2)), family("cycle", 4))
        assert tensor_blocks(*args)[1].colors == tensor_blocks(*args)[1].colors


class TestMasterSweep:
    """Every construction output verifies at exactly the stated color count,
    for every catalog graph at every feasible count."""

    H_REGULAR = [("complete", 2), ("cycle", 4), ("cycle", 6), ("complete", 4), ("cycle", 3)]
    H_CLASS1 = [("complete", 2), ("cycle", 4), ("cycle", 6), ("complete", 4)]

    def test_master(self, witnesses):
        hs_regular = [family(k, n) for k, n in self.H_REGULAR]
        hs_class1 = [family(k, n) for k, n in self.H_CLASS1]
        empties = [family("empty", n) for n in (2, 3, 4)]
        ran = 0
        for name, (G, s) in witnesses.items():
            for t in sorted(s.feasible_t):
                alpha = s.witnesses[t]
                for H in hs_regular:
                    r = H.degree(0)
                    assert verify_interval(*tensor_blocks(G, alpha, H)).t == t * r
                    assert verify_interval(*strong_tensor_blocks(G, alpha, H)).t == t * (r + 1)
                    ran += 2
                for H in hs_class1:
                    r = H.degree(0)
                    assert verify_interval(*strong_blocks(G, alpha, H)).t == t * (r + 1) + r
                    assert verify_interval(*lex_blocks(G, alpha, H)).t == t * H.n + r
                    ran += 2
                for H in empties:
                    assert verify_interval(*lex_blocks(G, alpha, H)).t == t * H.n
                    ran += 1
            for hname, (H, sh) in witnesses.items():
                P, c = combine_cartesian(G, s.witnesses[s.w], H, sh.witnesses[sh.w])
                assert verify_interval(P, c).t == s.w + sh.w
                P, c = combine_cartesian(G, s.witnesses[s.W], H, sh.witnesses[sh.W])
                assert verify_interval(P, c).t == s.W + sh.W
                ran += 2
        assert ran > 300
