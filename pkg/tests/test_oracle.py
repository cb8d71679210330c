import random

import pytest

from artinword.core import ResourceLimitError, format_word, parse_word
from artinword.oracle import (
    OracleConfig,
    equivalence_closure,
    oracle_equal,
    oracle_equal_verdict,
    oracle_geodesic_length,
    relator_moves,
)

from helpers import random_raw_word

P = parse_word
F = format_word


class TestRelatorMoves:
    def test_examples(self, params5):
        assert P("bab") in relator_moves(P("aba"), params5)
        assert P("ca") in relator_moves(P("ac"), params5)
        moves = relator_moves((), params5)
        assert len(moves) == 6
        assert all(len(m) == 2 and m[0] == (m[1] + 3) % 6 for m in moves)

    def test_alternating_relation(self, params5):
        assert P("cbcbc") in relator_moves(P("bcbcb"), params5)

    def test_deletion(self, params5):
        assert P("c") in relator_moves(P("aAc"), params5)


class TestGeodesicLength:
    def test_examples(self, params5, params4):
        config = OracleConfig(slack=4)
        assert oracle_geodesic_length(P("abaB"), config, params5) == 2
        assert oracle_geodesic_length(P("bcbcabacbcB"), config, params5) == 9
        assert oracle_geodesic_length((), config, params5) == 0

    def test_n4_example(self, params4):
        config = OracleConfig(slack=2)
        assert oracle_geodesic_length(P("bacbcbabcB"), config, params4) == 8

    def test_slack_stability(self, params5, params6):
        rng = random.Random(53)
        for params in (params5, params6):
            for _ in range(80):
                w = random_raw_word(rng, rng.randint(0, 9))
                a = oracle_geodesic_length(w, OracleConfig(slack=2), params)
                b = oracle_geodesic_length(w, OracleConfig(slack=4), params)
                assert a == b, F(w)

    def test_node_cap(self, params5):
        with pytest.raises(ResourceLimitError):
            oracle_geodesic_length(P("bcbcabacbcB"),
                                   OracleConfig(slack=4, node_cap=10),
                                   params5)


class TestEqual:
    def test_relations(self, params5):
        config = OracleConfig(slack=4)
        assert oracle_equal(P("aba"), P("bab"), config, params5)
        assert oracle_equal(P("ac"), P("ca"), config, params5)
        assert not oracle_equal(P("a"), P("b"), OracleConfig(slack=6),
                                params5)

    def test_verdicts(self, params5, params6):
        config = OracleConfig(slack=4)
        assert oracle_equal_verdict(P("ab"), P("ab"), config,
                                    params5) == (True, "identical")
        eq, ev = oracle_equal_verdict(P("aba"), P("bab"), config, params5)
        assert eq and ev == "met-in-search"
        # total exponent sum separates at odd n
        eq, ev = oracle_equal_verdict(P("a"), P("A"), config, params5)
        assert (eq, ev) == (False, "abelianization")
        # (exp_a + exp_b, exp_c) separates at even n
        eq, ev = oracle_equal_verdict(P("a"), P("c"), config, params6)
        assert (eq, ev) == (False, "abelianization")
        # a and b agree in every abelian quotient; only bounded search
        eq, ev = oracle_equal_verdict(P("a"), P("b"), config, params5)
        assert (eq, ev) == (False, "search-exhausted")

    def test_abelianization_reject_exact(self, params5, params6):
        """unequal abelianized vectors always yield certain negatives"""
        from artinword.oracle import _abelianization
        rng = random.Random(59)
        config = OracleConfig(slack=2)
        for params in (params5, params6):
            for _ in range(300):
                u = random_raw_word(rng, rng.randint(0, 8))
                v = random_raw_word(rng, rng.randint(0, 8))
                if _abelianization(u, params) != _abelianization(v, params):
                    eq, ev = oracle_equal_verdict(u, v, config, params)
                    assert (eq, ev) == (False, "abelianization")


class TestEquivalenceClosure:
    def test_examples(self, params5):
        assert equivalence_closure(P("ac"), params5) \
            == {P("ac"), P("ca")}
        assert equivalence_closure(P("aba"), params5) \
            == {P("aba"), P("bab")}
        assert equivalence_closure(P("bcbcb"), params5) \
            == {P("bcbcb"), P("cbcbc")}

    def test_members_preserve_element_and_length(self, params5):
        config = OracleConfig(slack=4)
        rng = random.Random(61)
        from artinword.reducer import reduce_to_geodesic
        for _ in range(20):
            w, _ = reduce_to_geodesic(random_raw_word(rng, 8), params5)
            for v in equivalence_closure(w, params5):
                assert len(v) == len(w)
                assert oracle_equal(v, w, config, params5)

    def test_cap(self, params5):
        with pytest.raises(ResourceLimitError):
            equivalence_closure(P("acacacacac"), params5, cap=5)
