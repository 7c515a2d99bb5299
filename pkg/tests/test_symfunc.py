import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from rees_lab.permstat import all_permutations, exd_set, stats
from rees_lab.polynomial import Polynomial, q_pochhammer
from rees_lab.series import IDENTITIES, series_identity_check
from rees_lab.symfunc import (NotSymmetricError, QSymExpansion, SymFunc, basis_matrix, character,
                              class_function, class_size, f_qsym, frobenius, inverse_basis_matrix,
                              is_representation, partition_list, q_eulerian_qsym, q_eulerian_symfunc,
                              q_eulerian_table, schur, schur_decompose, z_lambda)

q = Polynomial.var("q")


def coeffs(f):
    return {str(list(lam)): int(c) for lam, c in f.coeffs.items()}


class TestPartitions:
    def test_partition_counts(self):
        assert [len(partition_list(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_class_sizes_sum(self):
        for n in range(1, 7):
            assert sum(class_size(lam) for lam in partition_list(n)) == factorial(n)
            assert all(factorial(n) % z_lambda(lam) == 0 for lam in partition_list(n))


class TestBases:
    def test_small_expansions(self):
        assert SymFunc.h(2) == SymFunc.m((2,)) + SymFunc.m((1, 1))
        assert SymFunc.e(3) == SymFunc.m((1, 1, 1))
        # oracle: expand the power sums in two variables
        assert coeffs(SymFunc.p((2,))) == {"[2]": 1}
        assert coeffs(SymFunc.p((1, 1))) == {"[2]": 1, "[1, 1]": 2}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_omega_h_is_e(self, n):
        assert SymFunc.h(n).omega() == SymFunc.e(n)

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("basis", ["h", "e", "p"])
    def test_transition_matrices_invert(self, n, basis):
        M = basis_matrix(n, basis)
        Minv = inverse_basis_matrix(n, basis)
        size = len(M)
        for i in range(size):
            for j in range(size):
                v = sum(Fraction(M[i][k]) * Minv[k][j] for k in range(size))
                assert v == (1 if i == j else 0)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_h_times_e_minus_z(self, n):
        total = SymFunc.zero(n)
        for k in range(n + 1):
            total = total + (-1) ** k * (SymFunc.h(n - k) * SymFunc.e(k))
        assert total == 0

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 6), st.integers(0, 10 ** 6))
    def test_omega_involution_and_basis_round_trip(self, n, seed):
        rng = random.Random(seed)
        f = SymFunc(n, {lam: rng.randint(-4, 4) for lam in partition_list(n)})
        assert f.omega().omega() == f
        for basis in ("h", "e", "p", "s"):
            assert SymFunc.from_basis(basis, n, f.to_basis(basis)) == f

    def test_json(self):
        f = q_eulerian_symfunc(3, 1)
        data = f.to_json()
        assert data["basis"] == "m" and data["coeffs"]["[3]"] == "2"
        assert SymFunc.from_json(data) == f

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            SymFunc.h(2) + SymFunc.h(3)
        with pytest.raises(ValueError):
            SymFunc(2, {(3,): 1})


class TestCharacters:
    def test_trivial_and_sign(self):
        for n in range(1, 6):
            triv = {lam: 1 for lam in partition_list(n)}
            sign = {lam: (-1) ** (n - len(lam)) for lam in partition_list(n)}
            assert frobenius(triv, n) == SymFunc.h(n)
            assert frobenius(sign, n) == SymFunc.e(n)

    def test_sign_twist_is_omega_on_regular_rep(self):
        n = 4
        reg = {lam: (factorial(n) if lam == (1,) * n else 0) for lam in partition_list(n)}
        twisted = {lam: v * (-1) ** (n - len(lam)) for lam, v in reg.items()}
        assert frobenius(twisted, n) == frobenius(reg, n).omega()
        mult = schur_decompose(frobenius(reg, n))
        assert all(mult[lam] == character(lam, (1,) * n) for lam in partition_list(n))

    def test_character_orthogonality(self):
        for n in range(1, 7):
            parts = partition_list(n)
            for a in parts:
                for b in parts:
                    inner = sum(Fraction(character(a, mu) * character(b, mu), z_lambda(mu)) for mu in parts)
                    assert inner == (1 if a == b else 0)

    def test_class_function_round_trip(self):
        chi = {lam: character((3, 1), lam) for lam in partition_list(4)}
        assert class_function(frobenius(chi, 4)) == chi
        assert frobenius(chi, 4) == schur((3, 1))

    def test_virtual_not_representation(self):
        assert not is_representation(SymFunc.h(2) - SymFunc.e(2) * 2)
        assert is_representation(schur((2, 1)))


class TestQuasisymmetric:
    def test_forced_cases(self):
        for n in range(1, 5):
            m = n + 1
            assert f_qsym([], n, m).to_monomial_basis() == SymFunc.h(n).restrict(m)
            assert f_qsym(range(1, n), n, m).to_monomial_basis() == SymFunc.e(n).restrict(m)

    def test_f_is_quasisymmetric_not_symmetric(self):
        F = f_qsym([1], 3, 3)
        assert F.is_quasisymmetric() and not F.is_symmetric()
        with pytest.raises(NotSymmetricError):
            F.to_monomial_basis()

    def test_m_too_small(self):
        with pytest.raises(ValueError):
            f_qsym([], 3, 2)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_omega_of_fundamental(self, n):
        # omega(F_S) = F_{complement}; checked on the symmetric sums over Exd classes
        for j in range(n):
            left = q_eulerian_symfunc(n, j).omega()
            right = QSymExpansion(n, n, {})
            for w in all_permutations(n):
                if stats(w).exc == j:
                    right = right + f_qsym(frozenset(range(1, n)) - exd_set(w), n, n)
            assert left == right.to_monomial_basis()

    def test_frozen_q_values(self):
        # oracle: brute-force sums of F over S_n expanded with sympy
        assert coeffs(q_eulerian_symfunc(3, 1)) == {"[3]": 2, "[2, 1]": 3, "[1, 1, 1]": 4}
        assert coeffs(q_eulerian_symfunc(3, 0)) == {"[3]": 1, "[2, 1]": 1, "[1, 1, 1]": 1}
        assert coeffs(q_eulerian_symfunc(4, 1)) == {"[4]": 3, "[3, 1]": 5, "[2, 2]": 6, "[2, 1, 1]": 8,
                                                   "[1, 1, 1, 1]": 11}
        total = sum((q_eulerian_symfunc(3, j, 0) for j in range(3)), SymFunc.zero(3))
        assert coeffs(total) == {"[3]": 2, "[2, 1]": 2, "[1, 1, 1]": 2}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_identity_only_has_n_fixed_points(self, n):
        assert q_eulerian_symfunc(n, 0, n) == SymFunc.h(n)

    @pytest.mark.parametrize("n", range(0, 5))
    def test_fast_path_matches_expansion(self, n):
        m = max(n, 1)
        for j in range(max(n, 1)):
            for k in range(n + 1):
                slow = q_eulerian_qsym(n, j, k, m)
                assert slow.is_symmetric()
                assert slow.to_monomial_basis() == q_eulerian_symfunc(n, j, k)

    def test_symmetric_at_n6(self):
        for j in (1, 2):
            assert q_eulerian_qsym(6, j, None, 6).is_symmetric()

    def test_table_matches_single(self):
        table = q_eulerian_table(4)
        for (j, k), f in table.items():
            assert f == q_eulerian_symfunc(4, j, k)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_squarefree_coefficient_counts_permutations(self, n):
        total = sum((q_eulerian_symfunc(n, j) for j in range(n)), SymFunc.zero(n))
        assert total.coefficient((1,) * n) == factorial(n)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_palindromic_in_j(self, n):
        for j in range(n):
            assert q_eulerian_symfunc(n, j) == q_eulerian_symfunc(n, n - 1 - j)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            q_eulerian_symfunc(3, 3)
        with pytest.raises(ValueError):
            q_eulerian_qsym(3, 0, 4, 3)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_principal_specialization(self, n):
        m = 2 * n
        poch = q_pochhammer(n)
        for w in all_permutations(n):
            s = stats(w)
            ps = f_qsym(exd_set(w), n, m).principal_specialization()
            assert (ps * poch).truncate("q", m - 1) == (q ** (s.maj - s.exc)).truncate("q", m - 1)


class TestSeries:
    def test_ids(self):
        assert IDENTITIES == ("symgen-1", "symgen-2", "derangement-series")
        with pytest.raises(ValueError):
            series_identity_check("nope")

    @pytest.mark.parametrize("ident", ["symgen-1", "symgen-2", "derangement-series"])
    def test_through_degree_five(self, ident):
        res = series_identity_check(ident, 5, 5)
        assert res["pass"] and res["first_failure"] is None
