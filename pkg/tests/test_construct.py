import numpy as np
import pytest

from qcldpc.bch import bch_spec, symbolic_parity_check
from qcldpc.construct import (
    build_type1,
    build_type2,
    circulant,
    coset_circulant,
    coset_row,
    location_vector,
    select_cosets,
    validate_coset_for_type2,
)
from qcldpc.errors import InvalidCoset, NotEnoughCosets
from qcldpc.galois import cyclotomic_coset


class TestLocationVector:
    def test_anchors(self):
        v = location_vector(2, 31)
        assert v[1] == 1 and v.sum() == 1
        v = location_vector(1, 17)
        assert v[0] == 1 and v.sum() == 1
        # exponent 0 wraps to the last slot
        v = location_vector(0, 31)
        assert v[30] == 1 and v.sum() == 1


class TestCirculant:
    def test_identity(self):
        assert np.array_equal(circulant(1, 6).to_dense(), np.eye(6, dtype=np.uint8))

    def test_shift_matrix(self):
        d = circulant(2, 4).to_dense()
        expect = np.array(
            [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]], np.uint8
        )
        assert np.array_equal(d, expect)

    def test_exponent_periodicity(self):
        assert circulant(3, 11) == circulant(3 + 11, 11)

    def test_permutation(self):
        m = circulant(5, 9)
        assert np.array_equal(m.row_weights(), np.ones(9, np.int64))
        assert np.array_equal(m.col_weights(), np.ones(9, np.int64))


class TestBuildType1:
    def test_sizes(self):
        assert build_type1(bch_spec(2, 31, 5)).h.rows == 124
        assert build_type1(bch_spec(2, 31, 5)).h.cols == 961
        assert build_type1(bch_spec(2, 31, 3)).h.rows == 62
        h127 = build_type1(bch_spec(2, 127, 5)).h
        assert (h127.rows, h127.cols) == (508, 16129)

    def test_weights(self):
        code = build_type1(bch_spec(2, 31, 5))
        assert np.all(code.h.col_weights() == 4)
        assert np.all(code.h.row_weights() == 31)
        assert (code.col_weight, code.row_weight) == (4, 31)

    def test_blocks_match_exponent_matrix(self, rng):
        spec = bch_spec(2, 31, 5)
        code = build_type1(spec)
        em = symbolic_parity_check(spec)
        dense = code.h.to_dense()
        mu = spec.params.mu
        for _ in range(8):
            i = int(rng.integers(1, 5))
            j = int(rng.integers(0, 31))
            block = dense[(i - 1) * mu : i * mu, j * mu : (j + 1) * mu]
            assert np.array_equal(block, circulant(em.entry(i, j), mu).to_dense())

    def test_composite_length_warns(self):
        with pytest.warns(UserWarning, match="composite"):
            build_type1(bch_spec(2, 9, 2))

    def test_design_rate(self):
        from fractions import Fraction

        assert build_type1(bch_spec(2, 31, 5)).design_rate() == Fraction(27, 31)

    def test_column_relabeling_invariance(self):
        # rotating every block's position map is a column permutation that
        # preserves weights, rank, and girth
        from qcldpc.analysis import gf2_rank, girth

        code = build_type1(bch_spec(2, 31, 3))
        dense = code.h.to_dense()
        mu = 31
        rolled = dense.copy()
        for j in range(31):
            rolled[:, j * mu : (j + 1) * mu] = np.roll(
                dense[:, j * mu : (j + 1) * mu], 7, axis=1
            )
        from qcldpc.matrix import BinaryMatrix

        h2 = BinaryMatrix.from_dense(rolled)
        assert np.array_equal(
            np.sort(h2.col_weights()), np.sort(code.h.col_weights())
        )
        assert gf2_rank(h2) == gf2_rank(code.h)
        assert girth(h2) == girth(code.h)


class TestCosetRows:
    def test_printed_rows(self):
        c1 = cyclotomic_coset(1, 31, 2)
        assert np.array_equal(np.nonzero(coset_row(c1, 0, 31))[0], [0, 1, 3, 7, 15])
        assert np.array_equal(np.nonzero(coset_row(c1, 1, 31))[0], [1, 2, 4, 8, 16])

    def test_full_period_shift(self):
        c = cyclotomic_coset(3, 31, 2)
        assert np.array_equal(coset_row(c, 31, 31), coset_row(c, 0, 31))

    def test_circulant_weights(self):
        c = cyclotomic_coset(1, 31, 2)
        m = coset_circulant(c, 31)
        assert np.all(m.row_weights() == 5)
        assert np.all(m.col_weights() == 5)

    def test_singleton_coset_is_permutation(self):
        c0 = cyclotomic_coset(0, 31, 2)
        m = coset_circulant(c0, 31)
        assert np.all(m.row_weights() == 1)

    def test_weight3_mod7(self):
        c = cyclotomic_coset(1, 7, 2)
        m = coset_circulant(c, 7)
        assert np.all(m.row_weights() == 3)

    def test_modulus_mismatch(self):
        c = cyclotomic_coset(1, 7, 2)
        with pytest.raises(ValueError, match="modulus"):
            coset_row(c, 0, 31)


class TestValidateCoset:
    def test_all_differences_distinct(self):
        c1 = cyclotomic_coset(1, 31, 2)
        assert validate_coset_for_type2(c1, 31, 5) == (True, None)
        # {1,2,4} mod 7: differences 1,3,2 and their negations, all distinct
        c = cyclotomic_coset(1, 7, 2)
        assert validate_coset_for_type2(c, 7, 3).ok

    def test_repeated_difference_witness(self):
        # {3,6,9,12} mod 15 repeats difference 3
        c = cyclotomic_coset(3, 15, 2)
        v = validate_coset_for_type2(c, 15, 4)
        assert not v.ok
        assert v.offending_shift is not None
        elems = set(c.elements)
        shifted = {(e + v.offending_shift) % 15 for e in elems}
        assert len(elems & shifted) >= 2

    def test_wrong_size(self):
        c = cyclotomic_coset(5, 15, 2)  # {5, 10}, size 2
        assert validate_coset_for_type2(c, 15, 4) == (False, None)

    def test_singleton_passes(self):
        c0 = cyclotomic_coset(0, 31, 2)
        assert validate_coset_for_type2(c0, 31, 1).ok


class TestSelectCosets:
    def test_worked_example(self):
        assert [c.leader for c in select_cosets(31, 2, 3)] == [1, 3, 5]
        assert [c.leader for c in select_cosets(31, 2, 1)] == [1]

    def test_not_enough(self):
        # mod 15 only C_1 = {1,2,4,8} passes both guards
        assert [c.leader for c in select_cosets(15, 2, 1)] == [1]
        with pytest.raises(NotEnoughCosets):
            select_cosets(15, 2, 2)

    def test_bad_ell(self):
        with pytest.raises(ValueError):
            select_cosets(31, 2, 0)


class TestBuildType2:
    def test_worked_example_matrix(self):
        code = build_type2(31, 2, select_cosets(31, 2, 3))
        assert (code.h.rows, code.h.cols) == (31, 93)
        assert np.all(code.h.col_weights() == 5)
        assert np.all(code.h.row_weights() == 15)
        d = code.h.to_dense()
        assert "".join(map(str, d[0][:31])) == "1101000100000001000000000000000"
        assert "".join(map(str, d[1][:31])) == "0110100010000000100000000000000"

    def test_single_block(self):
        code = build_type2(31, 2, select_cosets(31, 2, 1))
        assert (code.h.rows, code.h.cols) == (31, 31)
        from fractions import Fraction

        assert code.design_rate() == Fraction(0, 1)

    def test_invalid_coset_rejected(self):
        c1 = cyclotomic_coset(1, 15, 2)
        c3 = cyclotomic_coset(3, 15, 2)
        with pytest.raises(InvalidCoset) as ei:
            build_type2(15, 2, [c1, c3])
        assert ei.value.offending_shift is not None

    def test_duplicate_leaders_rejected(self):
        c1 = cyclotomic_coset(1, 31, 2)
        with pytest.raises(InvalidCoset):
            build_type2(31, 2, [c1, c1])

    def test_blocks_are_coset_circulants(self):
        cosets = select_cosets(31, 2, 3)
        code = build_type2(31, 2, cosets)
        dense = code.h.to_dense()
        for b, c in enumerate(cosets):
            block = dense[:, b * 31 : (b + 1) * 31]
            assert np.array_equal(block, coset_circulant(c, 31).to_dense())
