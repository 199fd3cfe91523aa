import numpy as np
import pytest

from qcldpc.galois import (
    MAX_N,
    CodeFieldParams,
    coset_leaders,
    coset_size_bound_holds,
    cyclotomic_coset,
    field_params,
    find_prime_lengths,
    is_prime_power,
    multiplicative_order,
)


class TestMultiplicativeOrder:
    def test_anchors(self):
        assert multiplicative_order(2, 31) == 5
        assert multiplicative_order(2, 3) == 2
        assert multiplicative_order(2, 23) == 11

    def test_rejects_common_factor(self):
        with pytest.raises(ValueError, match="gcd"):
            multiplicative_order(2, 6)

    def test_rejects_small_args(self):
        with pytest.raises(ValueError):
            multiplicative_order(1, 5)
        with pytest.raises(ValueError):
            multiplicative_order(2, 1)

    def test_minimality(self):
        # q^m = 1 and no smaller exponent works
        for q, n in [(2, 31), (3, 13), (2, 127), (5, 11)]:
            m = multiplicative_order(q, n)
            assert pow(q, m, n) == 1
            assert all(pow(q, j, n) != 1 for j in range(1, m))


class TestCyclotomicCoset:
    def test_printed_examples(self):
        assert cyclotomic_coset(1, 31, 2).elements == (1, 2, 4, 8, 16)
        assert cyclotomic_coset(3, 31, 2).elements == (3, 6, 12, 17, 24)
        assert cyclotomic_coset(0, 31, 2).elements == (0,)

    def test_normalized_to_leader(self):
        c = cyclotomic_coset(16, 31, 2)
        assert c.leader == 1
        assert c.elements == (1, 2, 4, 8, 16)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            cyclotomic_coset(31, 31, 2)
        with pytest.raises(ValueError):
            cyclotomic_coset(-1, 31, 2)


class TestCosetLeaders:
    def test_leaders_mod_31(self):
        assert [c.leader for c in coset_leaders(31, 2)] == [0, 1, 3, 5, 7, 11, 15]

    def test_tiny(self):
        cs = coset_leaders(3, 2)
        assert [c.leader for c in cs] == [0, 1]
        assert cs[1].elements == (1, 2)

    def test_q4(self):
        cs = coset_leaders(5, 4)
        by_leader = {c.leader: c.elements for c in cs}
        assert by_leader[1] == (1, 4)
        assert by_leader[2] == (2, 3)

    @pytest.mark.parametrize("n,q", [(31, 2), (127, 2), (121, 3), (63, 2), (11, 3)])
    def test_partition(self, n, q):
        cs = coset_leaders(n, q)
        union = []
        for c in cs:
            union.extend(c.elements)
            # closure under multiplication by q
            assert {e * q % n for e in c.elements} == set(c.elements)
            assert c.leader == min(c.elements)
        assert sorted(union) == list(range(n))


class TestCosetSizeBound:
    def test_anchors(self):
        assert coset_size_bound_holds(1, 31, 2, 5)
        assert coset_size_bound_holds(8, 31, 2, 5)  # boundary: 8 * 31 == 31 * 8
        assert not coset_size_bound_holds(30, 31, 2, 5)
        assert not coset_size_bound_holds(0, 31, 2, 5)

    def test_in_range_cosets_have_full_size(self):
        # exhaustive over every usable (q, m, prime n) at small scale
        for q in (2, 3):
            for m in range(2, 9):
                for n in find_prime_lengths(q, m):
                    if n > 10_000:
                        continue
                    mu = q**m - 1
                    bound = n * q ** ((m + 1) // 2) // mu
                    for x in range(1, bound + 1):
                        assert coset_size_bound_holds(x, n, q, m)
                        assert len(cyclotomic_coset(x, n, q)) == m, (q, n, x)


class TestFindPrimeLengths:
    def test_known_members(self):
        assert 31 in find_prime_lengths(2, 5)
        assert 127 in find_prime_lengths(2, 7)
        assert find_prime_lengths(2, 4) == [5]

    def test_all_results_qualify(self):
        for q, m in [(2, 6), (3, 5), (2, 9)]:
            for n in find_prime_lengths(q, m):
                assert q ** (m // 2) < n <= q**m - 1
                assert multiplicative_order(q, n) == m

    def test_rejects_m1(self):
        with pytest.raises(ValueError):
            find_prime_lengths(2, 1)


class TestFieldParams:
    def test_standard(self):
        p = field_params(2, 31)
        assert p == CodeFieldParams(q=2, n=31, m=5, mu=31)

    def test_nonprimitive(self):
        p = field_params(2, 89)
        assert (p.m, p.mu) == (11, 2047)

    def test_rejects_below_window(self):
        # ord_23(2) = 11 but 23 <= 2^5, the primitive-side guard
        with pytest.raises(ValueError, match="violates"):
            field_params(2, 23)

    def test_rejects_non_prime_power(self):
        with pytest.raises(ValueError, match="prime power"):
            field_params(6, 35)

    def test_prime_power_accepted(self):
        assert is_prime_power(8)
        assert is_prime_power(9)
        assert is_prime_power(2)
        assert not is_prime_power(12)
        assert not is_prime_power(1)

    def test_rejects_gcd_violation(self):
        with pytest.raises(ValueError, match="gcd"):
            field_params(2, 8)

    def test_rejects_window_violation(self):
        # ord_5(7) = 4, so the window is (7^2, 7^4 - 1]; n = 5 falls below it
        with pytest.raises(ValueError, match="window"):
            field_params(7, 5)

    def test_cap(self):
        with pytest.raises(ValueError, match="MAX_N"):
            multiplicative_order(3, MAX_N + 3)
