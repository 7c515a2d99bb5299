from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from rees_lab.permstat import (BarredPermutation, all_permutations, bc_count_formula, bc_derangements,
                               bc_poly, bnd, bnd_by_count, check_permutation, cycle_type, d_count,
                               d_count_formula, derangement_poly, derangements, descents,
                               eulerian_number, exd_set, exd_set_shifted, generating_polynomial,
                               is_bc_derangement, multiset_derangements,
                               multiset_derangements_of_order, parse_permutation, q_derangement,
                               q_eulerian, stats, words_W, FLAVORS)
from rees_lab.polynomial import Polynomial, q_factorial

q = Polynomial.var("q")
t = Polynomial.var("t")

# oracle values: classical recurrences (see the decisions ledger for the oracle script)
DERANGEMENTS = [1, 0, 1, 2, 9, 44, 265, 1854, 14833]
BC_DERANGEMENTS = [1, 1, 5, 29, 233, 2329, 27949]
EULERIAN = {3: [1, 4, 1], 4: [1, 11, 11, 1], 5: [1, 26, 66, 26, 1], 6: [1, 57, 302, 302, 57, 1]}


def perms(max_n=7):
    return st.integers(1, max_n).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


class TestStatistics:
    def test_example_word(self):
        s = stats((4, 2, 1, 5, 3))
        assert s.exc == 2 and s.maj == 7 and s.des == 3 and s.fix == 1
        assert exd_set((4, 2, 1, 5, 3)) == {2, 3}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_identity(self, n):
        s = stats(tuple(range(1, n + 1)))
        assert (s.exc, s.maj, s.comaj, s.fix) == (0, 0, comb(n, 2), n)
        assert exd_set(tuple(range(1, n + 1))) == set()

    @pytest.mark.parametrize("n", range(2, 8))
    def test_long_cycle_exd(self, n):
        w = tuple(range(2, n + 1)) + (1,)
        assert exd_set(w) == exd_set_shifted(w) == set()

    def test_parse(self):
        assert parse_permutation("42153") == (4, 2, 1, 5, 3)
        assert parse_permutation("4,2,1,5,3") == (4, 2, 1, 5, 3)
        with pytest.raises(ValueError):
            parse_permutation("4215")
        with pytest.raises(ValueError):
            check_permutation((1, 1))

    def test_cycle_type(self):
        assert cycle_type((2, 3, 1, 5, 4)) == (3, 2)

    @settings(max_examples=200, deadline=None)
    @given(perms())
    def test_exd_two_implementations(self, w):
        assert exd_set(w) == exd_set_shifted(w)

    @settings(max_examples=200, deadline=None)
    @given(perms())
    def test_exd_sum_is_maj_minus_exc(self, w):
        s = stats(w)
        assert sum(exd_set(w)) == s.maj - s.exc


class TestPolynomials:
    def test_a3(self):
        assert q_eulerian(3) == 1 + (2 * q + q ** 2 + q ** 3) * t + q ** 2 * t ** 2

    @pytest.mark.parametrize("n", range(0, 8))
    def test_specializations(self, n):
        A = q_eulerian(n)
        assert A.evaluate(q=1, t=1) == factorial(n)
        assert A.subs(t=1) == q_factorial(n)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_eulerian_numbers(self, n):
        assert [eulerian_number(n, j) for j in range(n)] == EULERIAN[n]
        # excedances are equidistributed with descents
        A = q_eulerian(n, "exc")
        assert [A.coefficient({"t": j}) for j in range(n)] == EULERIAN[n]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_eulerian_symmetry(self, n):
        row = [eulerian_number(n, j) for j in range(n)]
        assert row == row[::-1] and sum(row) == factorial(n)

    def test_unknown_flavor(self):
        with pytest.raises(ValueError):
            q_eulerian(3, "nope")

    def test_comaj_flavor_relation(self):
        for n in range(1, 6):
            A = q_eulerian(n, "maj-exc")
            B = q_eulerian(n, "comaj-exc")
            assert B == (A.subs(q=q ** -1) * q ** comb(n, 2))


class TestDerangements:
    def test_counts(self):
        assert [d_count(n) for n in range(9)] == DERANGEMENTS
        assert [d_count_formula(n) for n in range(9)] == DERANGEMENTS

    def test_poly_specializes(self):
        for n in range(6):
            assert derangement_poly(n).evaluate(q=1, t=1) == DERANGEMENTS[n]
            assert q_derangement(n).evaluate(q=1) == DERANGEMENTS[n]

    def test_fixed_point_refinement(self):
        from rees_lab.identities import fixed_point_refinement_check
        for n in range(0, 8):
            for k in range(n + 1):
                assert fixed_point_refinement_check(n, k)["pass"]


class TestTypeBC:
    def test_bar_index_example(self):
        s = BarredPermutation((3, 2, 5, 4, 6, 1, 7), frozenset({1, 2, 4, 5, 7}))
        assert is_bc_derangement(s)
        assert bnd(s) == bnd_by_count(s) == 16

    def test_d1(self):
        found = list(bc_derangements(1))
        assert len(found) == 1 and found[0].bars == {1}

    def test_counts(self):
        assert [sum(1 for _ in bc_derangements(n)) for n in range(7)] == BC_DERANGEMENTS
        assert [bc_count_formula(n) for n in range(7)] == BC_DERANGEMENTS

    def test_bc_poly_at_one(self):
        assert [bc_poly(n).evaluate(q=1) for n in range(1, 6)] == BC_DERANGEMENTS[1:6]

    def test_bad_bars(self):
        with pytest.raises(ValueError):
            BarredPermutation((1, 2), frozenset({3}))

    @settings(max_examples=150, deadline=None)
    @given(perms(6), st.data())
    def test_bnd_two_implementations(self, w, data):
        bars = data.draw(st.frozensets(st.integers(1, len(w))))
        s = BarredPermutation(w, bars | {i for i, v in enumerate(w, 1) if v == i})
        assert bnd(s) == bnd_by_count(s)


class TestWords:
    def test_length_two(self):
        assert list(words_W(2, 0, 2)) == [(1, 2)]
        assert list(words_W(2, 1, 2)) == [(2, 1)]

    def test_multiset_examples(self):
        found = list(multiset_derangements([2, 1]))
        assert [(d.top, d.bottom) for d in found] == [((1, 2), (2, 1))]
        found = list(multiset_derangements([1, 1, 2, 2]))
        assert [(d.top, d.bottom) for d in found] == [((1, 1, 2, 2), (2, 2, 1, 1))]
        assert found[0].monomial() == (2, 2)

    def test_multiset_with_distinct_content_is_derangement(self):
        for n in range(1, 6):
            assert sum(1 for _ in multiset_derangements(range(1, n + 1))) == DERANGEMENTS[n]

    def test_invalid_matrix(self):
        from rees_lab.permstat import MultisetDerangement
        with pytest.raises(ValueError):
            MultisetDerangement((1, 2), (1, 2))
        with pytest.raises(ValueError):
            MultisetDerangement((2, 1), (1, 2))

    def test_order_counts(self):
        # with m = 1 nothing avoids equal columns
        assert list(multiset_derangements_of_order(2, 1)) == []
        assert sum(1 for _ in multiset_derangements_of_order(2, 2)) == 1


def test_generating_polynomial_spec():
    assert generating_polynomial(derangements(3), FLAVORS["exc"]) == t + t ** 2
    assert descents((3, 1, 2)) == [1]
