"""Recursive sign-matrix family: literals, Gram identities, determinants."""

import pytest
from hypothesis import given, strategies as st

from wittkit.errors import RangeError, UnsupportedError
from wittkit.omega import (MAX_K_DET, MAX_K_REAL, OmegaVariant, bareiss_det,
                           det_omega, fast_apply, gram_check, omega)
from wittkit.scalars import Scalar

J = Scalar.j()

fractions = st.fractions(min_value=-9, max_value=9, max_denominator=9)


class TestLiterals:
    def test_k1(self):
        assert omega(1, "plain").int_rows == [[1, 1], [1, -1]]
        assert omega(1, "minus").int_rows == [[1, 1], [-1, 1]]

    def test_k2_plain(self):
        assert omega(2, "plain").int_rows == [
            [1, 1, 1, 1], [1, -1, -1, 1], [1, 1, -1, -1], [1, -1, 1, -1]]

    def test_k2_minus(self):
        assert omega(2, "minus").int_rows == [
            [1, 1, 1, 1], [-1, 1, 1, -1], [-1, -1, 1, 1], [-1, 1, -1, 1]]

    def test_k2_complex(self):
        rows = omega(2, "complex-plain").rows
        assert rows[0] == [Scalar.of(1)] * 4
        assert rows[1] == [J, -J, -J, J]
        assert rows[2] == [Scalar.of(x) for x in (1, 1, -1, -1)]
        assert rows[3] == [Scalar.of(x) for x in (1, -1, 1, -1)]

    def test_k2_complex_minus(self):
        rows = omega(2, "complex-minus").rows
        assert rows[1] == [-J, J, J, -J]
        assert rows[2] == [Scalar.of(x) for x in (-1, -1, 1, 1)]


class TestRecursion:
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_block_structure(self, k):
        # top half [P, M], bottom half [P, -M] of the previous level
        p = omega(k - 1, "plain").int_rows
        m = omega(k - 1, "minus").int_rows
        h = 1 << (k - 1)
        rows = omega(k, "plain").int_rows
        for i in range(h):
            assert rows[i] == p[i] + m[i]
            assert rows[h + i] == p[i] + [-x for x in m[i]]

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_minus_block_structure(self, k):
        # the minus family recurses as [[M, P], [-P, M]]
        p = omega(k - 1, "plain").int_rows
        m = omega(k - 1, "minus").int_rows
        h = 1 << (k - 1)
        rows = omega(k, "minus").int_rows
        for i in range(h):
            assert rows[i] == m[i] + p[i]
            assert rows[h + i] == [-x for x in p[i]] + m[i]

    def test_first_row_all_ones(self):
        for k in range(1, MAX_K_REAL + 1):
            assert all(x == 1 for x in omega(k, "plain").int_rows[0])


class TestGuards:
    def test_k_range(self):
        with pytest.raises(RangeError):
            omega(0)
        with pytest.raises(RangeError):
            omega(MAX_K_REAL + 1)

    def test_complex_depth_unsupported(self):
        with pytest.raises(UnsupportedError):
            omega(3, "complex-plain")

    def test_det_range(self):
        with pytest.raises(RangeError):
            det_omega(MAX_K_DET + 1)


class TestIdentities:
    @pytest.mark.parametrize("k", range(1, MAX_K_REAL + 1))
    @pytest.mark.parametrize("variant", ["plain", "minus"])
    def test_gram(self, k, variant):
        assert gram_check(k, variant)

    @pytest.mark.parametrize("k", [1, 2])
    @pytest.mark.parametrize("variant", ["complex-plain", "complex-minus"])
    def test_hermitian_gram(self, k, variant):
        assert gram_check(k, variant)

    @pytest.mark.parametrize("k,want", [
        (1, -2), (2, -16), (3, -4096), (4, -(2 ** 32)), (5, -(2 ** 80))])
    def test_determinants(self, k, want):
        assert det_omega(k) == want
        assert want == -(2 ** k) ** (2 ** (k - 1))

    def test_minus_determinants_flip_sign(self):
        for k in range(1, 5):
            assert det_omega(k, "minus") == -det_omega(k, "plain")


class TestBareiss:
    def test_small_known(self):
        assert bareiss_det([[2]]) == 2
        assert bareiss_det([[1, 2], [3, 4]]) == -2
        assert bareiss_det([[0, 1], [1, 0]]) == -1

    def test_singular(self):
        assert bareiss_det([[1, 2], [2, 4]]) == 0

    def test_permutation_with_zero_pivot(self):
        rows = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
        assert bareiss_det(rows) == -1


class TestFastApply:
    @pytest.mark.parametrize("variant", ["plain", "minus"])
    @given(data=st.data())
    def test_matches_dense(self, variant, data):
        k = data.draw(st.integers(min_value=1, max_value=5))
        xs = [Scalar.of(data.draw(fractions)) for _ in range(1 << k)]
        w = omega(k, variant)
        assert fast_apply(k, variant, xs) == w.dense_apply(xs)

    def test_length_guard(self):
        with pytest.raises(ValueError):
            fast_apply(2, "plain", [Scalar.of(1)] * 3)


class TestSerialization:
    def test_csv_int_rows(self):
        assert omega(1, "plain").to_csv() == "1,1\n1,-1\n"

    def test_json_shape(self):
        data = omega(1, "plain").to_json()
        assert data["k"] == 1 and data["variant"] == "plain"
        assert data["dim"] == 2

    def test_latex_smoke(self):
        assert "pmatrix" in omega(2, "plain").latex()
