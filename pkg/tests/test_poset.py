import pytest
from hypothesis import given, settings, strategies as st

from rees_lab.catalog import boolean_lattice, tary_tree
from rees_lab.homology import mobius_hat
from rees_lab.poset import (BOTTOM, TOP, PosetError, adjoin_bottom_and_top, adjoin_top, build_poset,
                            chain, check_order_map, dual, find_isomorphism, ideal_Ij, interval,
                            is_uniform, lower_ideal, poset_isomorphic, psi_i, r_i_poset,
                            random_ranked_bounded_poset, rees_product, rees_product_by_relation,
                            remove_bottom, subposet, truncated_rees_chain)


def random_posets():
    return st.builds(random_ranked_bounded_poset, st.integers(1, 4), st.integers(1, 4),
                     st.sampled_from([0.3, 0.5, 0.8, 1.0]), st.integers(0, 10 ** 6))


class TestBuild:
    def test_singleton(self):
        P = build_poset(["a"], [])
        assert len(P) == 1 and P.length == 0 and P.ranked

    def test_chain(self):
        P = build_poset(range(4), [(i, i + 1) for i in range(3)])
        assert P.length == 3
        assert poset_isomorphic(P, chain(4))

    def test_diamond(self):
        P = build_poset(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
        assert P.ranked and P.length == 2 and len(P) == 4
        assert poset_isomorphic(P, boolean_lattice(2))

    def test_unranked_is_flagged(self):
        P = build_poset("0abc1", [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
        assert not P.ranked

    def test_errors(self):
        with pytest.raises(PosetError):
            build_poset(["a"], [("a", "z")])
        with pytest.raises(PosetError):
            build_poset(["a", "b"], [("a", "b"), ("b", "a")])
        with pytest.raises(PosetError):
            build_poset("abc", [("a", "b"), ("b", "c"), ("a", "c")])

    def test_canonical_order(self):
        pairs = [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]
        assert build_poset("1ba0", pairs) == build_poset("0ab1", reversed(pairs))


class TestOperators:
    def test_chain_self_dual(self):
        assert poset_isomorphic(dual(chain(4)), chain(4))

    def test_remove_bottom_of_b3(self):
        assert len(remove_bottom(boolean_lattice(3))) == 7

    def test_hat_adds_two(self):
        P = remove_bottom(boolean_lattice(2))
        H = adjoin_bottom_and_top(P)
        assert len(H) == len(P) + 2 and H.bottom == BOTTOM and H.top == TOP

    def test_interval(self):
        B = boolean_lattice(3)
        I = interval(B, (1,), (1, 2, 3))
        assert len(I) == 4 and I.length == 2
        assert len(interval(B, (1,), (1, 2, 3), closed=False)) == 2
        with pytest.raises(PosetError):
            interval(B, (1,), (2, 3))

    def test_remove_bottom_needs_minimum(self):
        with pytest.raises(PosetError):
            remove_bottom(build_poset("ab", []))

    @settings(max_examples=40, deadline=None)
    @given(random_posets())
    def test_dual_is_involution(self, P):
        assert dual(dual(P)) == P

    @settings(max_examples=30, deadline=None)
    @given(random_posets(), st.data())
    def test_interval_commutes_with_dual(self, P, data):
        i = data.draw(st.integers(0, len(P) - 1))
        ups = [j for j in range(len(P)) if P.leq_index(i, j)]
        j = data.draw(st.sampled_from(ups))
        x, y = P.elements[i], P.elements[j]
        assert interval(dual(P), y, x) == dual(interval(P, x, y))


class TestRees:
    def test_figure_one_size(self):
        R = rees_product(remove_bottom(boolean_lattice(3)), chain(3))
        # oracle: pairs with rank(S) - 1 >= i, counted by rank of S
        assert len(R) == 12
        assert [len(R.elements_of_rank(k)) for k in range(3)] == [3, 6, 3]

    def test_chain_times_point(self):
        R = rees_product(chain(2), chain(1))
        assert sorted(R.elements) == [(0, 0), (1, 0)]
        assert R.cover_pairs() == [((0, 0), (1, 0))]
        R = rees_product(chain(2), chain(2))
        assert sorted(R.elements) == [(0, 0), (1, 0), (1, 1)]
        assert sorted(R.cover_pairs()) == [((0, 0), (1, 0)), ((0, 0), (1, 1))]

    def test_b1_tree_is_antichain(self):
        for t in (1, 2, 3):
            R = remove_bottom(rees_product(boolean_lattice(1), tary_tree(t, 1)))
            assert len(R) == t + 1 and not R.covers

    def test_rank_is_rank_in_first_factor(self):
        R = rees_product(boolean_lattice(3), chain(3))
        assert all(R.rank_of((a, i)) == len(a) for a, i in R.elements)

    def test_unranked_rejected(self):
        P = build_poset("0abc1", [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
        with pytest.raises(PosetError):
            rees_product(P, chain(2))

    @settings(max_examples=25, deadline=None)
    @given(random_posets(), st.integers(1, 3))
    def test_cover_rule_matches_order_relation(self, P, t):
        T = tary_tree(t, 2)
        assert rees_product(P, T) == rees_product_by_relation(P, T)
        assert rees_product(P, chain(3)) == rees_product_by_relation(P, chain(3))


class TestIdeals:
    def test_i0_of_b3(self):
        I = ideal_Ij(boolean_lattice(3), 0)
        assert len(I) == 6 and I.length == 1
        assert all(j == 0 for _, j in I.elements)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_ideal_sizes(self, n):
        # (S, i) lies below (top, j) iff i <= |S| - 1, i <= j and i >= j - (n - |S|)
        from math import comb
        for j in range(n):
            expected = sum(comb(n, k) * (min(j, k - 1) - max(0, j - (n - k)) + 1) for k in range(1, n))
            assert len(ideal_Ij(boolean_lattice(n), j)) == expected

    def test_ideal_sizes_frozen(self):
        assert [len(ideal_Ij(boolean_lattice(3), j)) for j in range(3)] == [6, 9, 6]
        assert [len(ideal_Ij(boolean_lattice(4), j)) for j in range(4)] == [14, 24, 24, 14]

    def test_range_checked(self):
        with pytest.raises(PosetError):
            ideal_Ij(boolean_lattice(3), 3)

    def test_psi_on_r3_b3_is_antiisomorphism(self):
        B = boolean_lattice(3)
        R = r_i_poset(B, 3)
        assert check_order_map(R, r_i_poset(dual(B), 3), psi_i(B, 3), reverse=True)
        assert not check_order_map(R, r_i_poset(dual(B), 3), psi_i(B, 3))

    @settings(max_examples=30, deadline=None)
    @given(random_posets(), st.data())
    def test_psi_inverse_and_order_reversing(self, P, data):
        i = data.draw(st.integers(0, P.length))
        f, g = psi_i(P, i), psi_i(dual(P), i)
        assert all(g[f[x]] == x for x in f)
        assert check_order_map(r_i_poset(P, i), r_i_poset(dual(P), i), f, reverse=True)

    @settings(max_examples=30, deadline=None)
    @given(random_posets(), st.data())
    def test_positive_part_of_r_i(self, P, data):
        i = data.draw(st.integers(1, P.length))
        R = r_i_poset(P, i)
        plus = subposet(R, [k for k, (_, j) in enumerate(R.elements) if j > 0])
        target = lower_ideal(truncated_rees_chain(P), (P.top, i - 1))
        assert check_order_map(plus, target, {(a, j): (a, j - 1) for a, j in plus.elements})
        # the same poset with its top removed is I_{i-1}(P)
        opened = lower_ideal(truncated_rees_chain(P), (P.top, i - 1), closed=False)
        assert opened == ideal_Ij(P, i - 1)


class TestUniform:
    def test_boolean_uniform(self):
        assert is_uniform(boolean_lattice(4))

    def test_subspace_uniform(self):
        from rees_lab.catalog import subspace_lattice
        assert is_uniform(subspace_lattice(3, 2))

    def test_unbalanced_v_rejected(self):
        V = build_poset("0abc", [("0", "a"), ("a", "b"), ("0", "c")])
        assert not V.ranked
        assert not is_uniform(adjoin_top(V))

    def test_ranked_but_not_uniform(self):
        P = build_poset(["0", "a", "b", "x", "y", "1"],
                        [("0", "a"), ("0", "b"), ("a", "x"), ("a", "y"), ("b", "y"),
                         ("x", "1"), ("y", "1")])
        assert P.ranked and not is_uniform(P)

    def test_isomorphism_search(self):
        assert find_isomorphism(boolean_lattice(2), chain(3)) is None
        f = find_isomorphism(dual(boolean_lattice(3)), boolean_lattice(3))
        assert f is not None


class TestRandom:
    def test_seed_stability(self):
        a = random_ranked_bounded_poset(4, 3, 0.5, 7)
        b = random_ranked_bounded_poset(4, 3, 0.5, 7)
        assert a == b and a.covers == b.covers

    def test_full_density(self):
        P = random_ranked_bounded_poset(4, 3, 1.0, 11)
        for k in range(P.length):
            low, high = P.elements_of_rank(k), P.elements_of_rank(k + 1)
            assert all(P.less(x, y) for x in low for y in high)

    def test_n1_is_two_chain(self):
        for seed in range(5):
            P = random_ranked_bounded_poset(1, 4, 0.3, seed)
            assert poset_isomorphic(P, chain(2))

    @settings(max_examples=50, deadline=None)
    @given(random_posets())
    def test_graded_and_bounded(self, P):
        assert P.ranked and P.is_bounded
        assert all(1 <= len(P.elements_of_rank(k)) <= 4 for k in range(1, P.length))

    def test_bad_arguments(self):
        with pytest.raises(PosetError):
            random_ranked_bounded_poset(0, 2, 0.5, 1)
        with pytest.raises(PosetError):
            random_ranked_bounded_poset(2, 2, 0.0, 1)


def test_json_and_dot_round_trip():
    from rees_lab.poset import poset_from_json
    P = rees_product(remove_bottom(boolean_lattice(2)), chain(2))
    assert poset_from_json(P.to_json()) == P
    assert P.to_dot().startswith("digraph")


@settings(max_examples=30, deadline=None)
@given(random_posets())
def test_mobius_of_dual(P):
    assert mobius_hat(dual(P)) == mobius_hat(P)
