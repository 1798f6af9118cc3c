"""Global nilpotent pairs, spectral bases, and the coordinate isomorphism."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wittkit.errors import (ExtractorUnavailableError, RangeError,
                            SignatureMismatchError)
from wittkit.ga import Multivector, g3, g_nn, gp, reverse, sym_dot
from wittkit.scalars import Scalar
from wittkit.witt_global import (MvMatrix, SpectralBasis,
                                 check_duality_relations,
                                 check_global_duality, make_global_witt,
                                 matrix_to_mv, mv_to_matrix,
                                 spectral_basis_nn)

fractions = st.fractions(min_value=-9, max_value=9, max_denominator=9)


def multivectors(sig):
    coeff = fractions.map(Scalar.of)
    return st.lists(
        st.tuples(st.integers(min_value=0, max_value=sig.dim - 1), coeff),
        max_size=6).map(
        lambda terms: sum((Multivector.blade(sig, m, c) for m, c in terms),
                         Multivector.zero(sig)))


class TestGlobalPairs:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_duality_relations(self, n):
        assert check_global_duality(make_global_witt(n)).ok

    def test_half_sum_forms(self):
        w = make_global_witt(2)
        sig = w.sig
        half = Fraction(1, 2)
        e1 = Multivector.generator(sig, 0)
        f1 = Multivector.generator(sig, 1)
        assert w.a[0] == (e1 + f1).scale(half)
        assert w.b[0] == (e1 - f1).scale(half)

    def test_range_guard(self):
        with pytest.raises(RangeError):
            make_global_witt(0)
        with pytest.raises(RangeError):
            make_global_witt(5)

    def test_perturbed_pair_fails_only_nilpotency(self):
        # b1 -> b1 + a1 keeps every cross relation but breaks b1^2 = 0,
        # so the checker has to test nilpotency separately
        w = make_global_witt(1)
        rep = check_duality_relations(w.a, [w.b[0] + w.a[0]])
        assert not rep.ok
        assert rep.failures() == ["b1^2 = 0"]

    def test_pair_products_are_idempotents(self):
        w = make_global_witt(1)
        ab = gp(w.a[0], w.b[0])
        ba = gp(w.b[0], w.a[0])
        one = Multivector.scalar(w.sig, 1)
        assert gp(ab, ab) == ab
        assert gp(ba, ba) == ba
        assert ab + ba == one


class TestSpectralArrays:
    def test_n1_array(self):
        w = make_global_witt(1)
        sb = spectral_basis_nn(1)
        a, b = w.a[0], w.b[0]
        assert sb.E == [[gp(b, a), b], [a, gp(a, b)]]

    def test_n1_coordinates(self):
        w = make_global_witt(1)
        sb = spectral_basis_nn(1)
        a, b = w.a[0], w.b[0]
        assert sb.mv_to_matrix(a) == MvMatrix([[0, 0], [1, 0]])
        assert sb.mv_to_matrix(b) == MvMatrix([[0, 1], [0, 0]])
        assert sb.mv_to_matrix(gp(b, a)) == MvMatrix([[1, 0], [0, 0]])
        assert sb.mv_to_matrix(gp(a, b)) == MvMatrix([[0, 0], [0, 1]])

    def test_n2_array_with_reversed_idempotents(self):
        w = make_global_witt(2)
        sb = spectral_basis_nn(2)
        a1, a2 = w.a
        b1, b2 = w.b
        u1, u2 = gp(b1, a1), gp(b2, a2)
        r1, r2 = reverse(u1), reverse(u2)
        expected = [
            [gp(u1, u2), gp(b1, u2), gp(b2, u1), gp(b2, b1)],
            [gp(a1, u2), gp(r1, u2), gp(a1, b2), -gp(b2, r1)],
            [gp(a2, u1), gp(a2, b1), gp(u1, r2), gp(b1, r2)],
            [gp(a1, a2), -gp(a2, r1), gp(a1, r2), gp(r1, r2)],
        ]
        assert sb.E == expected

    def test_n2_signed_entries(self):
        # the two negative entries come from moving a factor past a nilpotent
        sb = spectral_basis_nn(2)
        w = make_global_witt(2)
        a1, a2 = w.a
        b1, b2 = w.b
        r1 = reverse(gp(b1, a1))
        assert sb.E[1][3] == -gp(b2, r1)
        assert sb.E[3][1] == -gp(a2, r1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_identity_sum(self, n):
        sb = spectral_basis_nn(n)
        assert sb.identity_sum() == Multivector.scalar(sb.sig, 1)

    @pytest.mark.parametrize("n", [1, 2])
    def test_matrix_unit_law_full(self, n):
        assert spectral_basis_nn(n).matrix_unit_law()

    def test_matrix_unit_law_sampled_n3(self):
        sb = spectral_basis_nn(3)
        quads = [(i, j, k, l)
                 for i in (0, 3, 7) for j in (1, 5) for k in (1, 2) for l in (0, 6)]
        assert sb.matrix_unit_law(quads)

    def test_alternative_border(self):
        w = make_global_witt(1)
        one = Multivector.scalar(w.sig, 1)
        e = w.a[0] + w.b[0]
        u_plus = gp(w.b[0], w.a[0])
        u_minus = one - u_plus
        alt = SpectralBasis([one, e], u_plus, [one, e])
        assert alt.E == [[u_plus, gp(e, u_minus)], [gp(e, u_plus), u_minus]]


class TestIsomorphism:
    @given(multivectors(g_nn(1)), multivectors(g_nn(1)))
    def test_homomorphism_g11(self, g, h):
        sb = spectral_basis_nn(1)
        assert sb.mv_to_matrix(gp(g, h)) == \
            sb.mv_to_matrix(g).matmul(sb.mv_to_matrix(h))

    @given(multivectors(g_nn(2)), multivectors(g_nn(2)))
    def test_homomorphism_g22(self, g, h):
        sb = spectral_basis_nn(2)
        assert sb.mv_to_matrix(gp(g, h)) == \
            sb.mv_to_matrix(g).matmul(sb.mv_to_matrix(h))

    @given(multivectors(g_nn(2)))
    def test_roundtrip_g22(self, g):
        sb = spectral_basis_nn(2)
        assert sb.matrix_to_mv(sb.mv_to_matrix(g)) == g

    def test_radical_coefficients_pass_through(self):
        # basis entries are rational, but inputs may carry radicals
        sb = spectral_basis_nn(1)
        g = Multivector.blade(sb.sig, 0b01, Scalar.sqrt(2))
        assert sb.matrix_to_mv(sb.mv_to_matrix(g)) == g

    def test_module_level_helpers(self):
        sb = spectral_basis_nn(1)
        g = Multivector.generator(sb.sig, 0)
        assert matrix_to_mv(mv_to_matrix(g, sb), sb) == g

    def test_signature_mismatch(self):
        sb = spectral_basis_nn(1)
        with pytest.raises(SignatureMismatchError):
            sb.mv_to_matrix(Multivector.generator(g3(), 0))

    def test_scalar_maps_to_scaled_identity(self):
        sb = spectral_basis_nn(2)
        g = Multivector.scalar(sb.sig, Fraction(3, 7))
        assert sb.mv_to_matrix(g) == MvMatrix.identity(4).scale(Fraction(3, 7))


class TestExtractorGuards:
    def test_radical_basis_entries_rejected(self):
        w = make_global_witt(1)
        one = Multivector.scalar(w.sig, 1)
        e = (w.a[0] + w.b[0]).scale(Scalar.sqrt(2))
        sb = SpectralBasis([one, e], gp(w.b[0], w.a[0]), [one, e])
        with pytest.raises(ExtractorUnavailableError):
            sb.mv_to_matrix(one)

    def test_dependent_basis_rejected(self):
        w = make_global_witt(1)
        one = Multivector.scalar(w.sig, 1)
        sb = SpectralBasis([one, one], gp(w.b[0], w.a[0]), [one, one])
        with pytest.raises(ExtractorUnavailableError):
            sb.mv_to_matrix(one)


class TestMvMatrix:
    def test_identity_and_matmul(self):
        m = MvMatrix([[1, 2], [3, 4]])
        assert m.matmul(MvMatrix.identity(2)) == m

    def test_transpose(self):
        m = MvMatrix([[1, 2], [3, 4]])
        assert m.transpose() == MvMatrix([[1, 3], [2, 4]])

    def test_add_scale(self):
        m = MvMatrix([[1, 0], [0, 1]])
        assert m + m == m.scale(2)

    def test_json_roundtrip(self):
        m = MvMatrix([[Scalar.j(), 0], [Scalar.sqrt(3), 1]])
        assert MvMatrix.from_json(m.to_json()) == m

    def test_from_json_shape_guard(self):
        with pytest.raises(ValueError):
            MvMatrix.from_json({"dim": 2, "entries": [[]]})

    def test_block_latex_for_dim4(self):
        m = MvMatrix.identity(4)
        assert "\\hline" in m.latex(block=True)
