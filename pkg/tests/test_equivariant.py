from itertools import permutations

import pytest

from rees_lab.catalog import tary_tree
from rees_lab.equivariant import (NotConcentratedError, PosetAction, boolean_action, homology_character,
                                  ideal_action, ideal_frobenius, lefschetz_character, schur_positive,
                                  tree_action, tree_frobenius, tree_lefschetz_frobenius,
                                  truncated_chain_action, truncated_chain_frobenius)
from rees_lab.homology import top_betti
from rees_lab.permstat import cycle_type, eulerian_number
from rees_lab.polynomial import q_int
from rees_lab.poset import PosetError, build_poset, chain
from rees_lab.symfunc import SymFunc, q_eulerian_symfunc, q_eulerian_table, schur

DERANGEMENTS = [1, 0, 1, 2, 9, 44]


def total_ideals(m):
    if m == 0:
        return SymFunc(0, {(): 1})
    return sum((ideal_frobenius(m, j) for j in range(m)), SymFunc.zero(m))


class TestActions:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_actions_are_automorphisms(self, n):
        A = boolean_action(n)
        for B in [A, ideal_action(A, n // 2), truncated_chain_action(A), tree_action(A, 2)]:
            B.check()

    def test_bad_action_rejected(self):
        # swapping the ends of a chain is not order preserving
        bad = PosetAction(chain(3), 2, lambda g, x: 2 - x if g == (2, 1) else x)
        with pytest.raises(PosetError):
            bad.check()

    @pytest.mark.parametrize("n", [3, 4])
    def test_trace_is_a_class_function(self, n):
        A = ideal_action(boolean_action(n), 1)
        seen = {}
        for g in permutations(range(1, n + 1)):
            seen.setdefault(cycle_type(g), set()).add(A.trace(g))
        assert all(len(v) == 1 for v in seen.values())

    def test_not_concentrated(self):
        Q = build_poset("abcd", [("a", "b"), ("c", "d")])
        A = PosetAction(Q, 1, lambda g, x: x)
        with pytest.raises(NotConcentratedError):
            homology_character(A)
        assert lefschetz_character(A) == {(1,): 1}


class TestIdeals:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_dimension_is_eulerian(self, n):
        for j in range(n):
            ch = ideal_frobenius(n, j)
            assert ch.coefficient((1,) * n) == eulerian_number(n, j)
            assert ch.coefficient((1,) * n) == top_betti(ideal_action(boolean_action(n), j).poset)

    def test_frozen_n3(self):
        # oracle: Q_{3,1} = 2 s_3 + s_21 from the brute-force sum of F
        assert ideal_frobenius(3, 1) == schur((2, 1)) + schur((1, 1, 1)) * 2
        assert ideal_frobenius(3, 1) == q_eulerian_symfunc(3, 1).omega()

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_omega_q(self, n):
        for j in range(n):
            ch = ideal_frobenius(n, j)
            assert ch == q_eulerian_symfunc(n, j).omega()
            assert schur_positive(ch)


class TestDerangements:
    def test_frozen_n3(self):
        assert truncated_chain_frobenius(3) == SymFunc.e(3) * 2

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_fixed_point_free_part(self, n):
        ch = truncated_chain_frobenius(n)
        rhs = sum((f.omega() for (j, k), f in q_eulerian_table(n).items() if k == 0), SymFunc.zero(n))
        assert ch == rhs
        assert ch.coefficient((1,) * n) == DERANGEMENTS[n]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_alternating_sum_of_ideals(self, n):
        total = SymFunc.zero(n)
        for m in range(n + 1):
            total = total + (-1) ** (n - m) * (total_ideals(m) * SymFunc.h(n - m))
        assert total == truncated_chain_frobenius(n)


class TestTrees:
    @pytest.mark.parametrize("n", range(1, 4))
    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_tree_character(self, n, t):
        rhs = sum((q_eulerian_symfunc(n, j).omega() * t ** (j + 1) for j in range(n)), SymFunc.zero(n))
        assert tree_frobenius(n, t) == rhs

    @pytest.mark.parametrize("n", range(1, 4))
    @pytest.mark.parametrize("t", [1, 2])
    def test_dual_tree_is_weighted_ideals(self, n, t):
        lhs = sum((ideal_frobenius(n, j - 1) * t ** j for j in range(1, n + 1)), SymFunc.zero(n))
        assert tree_frobenius(n, t, use_dual=True) == lhs

    @pytest.mark.parametrize("n", range(0, 4))
    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_lefschetz_recursion(self, n, t):
        total = SymFunc.zero(n)
        for k in range(n + 1):
            weight = int(q_int(k + 1, "t").evaluate(t=t))
            total = total + weight * (SymFunc.h(k) * tree_lefschetz_frobenius(n - k, t))
        assert total == -SymFunc.h(n)

    def test_unary_tree_is_chain(self):
        # t = 1 gives the truncated chain case up to the top element
        assert tree_frobenius(3, 1) == sum((ideal_frobenius(3, j) for j in range(3)), SymFunc.zero(3))
        assert len(tary_tree(1, 3)) == 4
