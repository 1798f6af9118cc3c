"""Multivector kernel: blade products, involutions, grades, serialization."""

import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from wittkit.errors import RangeError, SignatureMismatchError
from wittkit.ga import (MAX_GENERATORS, Multivector, Signature, anticommutator,
                        blade_product, g3, g13, g_1n, g_nn, gp, gp_chain,
                        grade_project, reverse, sym_dot, wedge, wedge_chain)
from wittkit.scalars import Scalar

SIG = g_nn(2)

fractions = st.fractions(min_value=-9, max_value=9, max_denominator=9)


def multivectors(sig=SIG):
    coeff = fractions.map(Scalar.of)
    return st.lists(
        st.tuples(st.integers(min_value=0, max_value=sig.dim - 1), coeff),
        max_size=8).map(
        lambda terms: sum((Multivector.blade(sig, m, c) for m, c in terms),
                         Multivector.zero(sig)))


def vectors(sig=SIG):
    return st.lists(fractions, min_size=sig.m, max_size=sig.m).map(
        lambda cs: sum((Multivector.generator(sig, i).scale(c)
                        for i, c in enumerate(cs)),
                       Multivector.zero(sig)))


class TestSignature:
    def test_generator_count_bounds(self):
        with pytest.raises(RangeError):
            Signature((1,) * (MAX_GENERATORS + 1))
        with pytest.raises(RangeError):
            Signature(())

    def test_square_values_checked(self):
        with pytest.raises(ValueError):
            Signature((1, 2))

    def test_preset_orders(self):
        assert g_nn(2).gen_names == ("e1", "f1", "e2", "f2")
        assert g_1n(3).gen_names == ("e1", "f1", "f2", "f3")
        assert g3().squares == (1, 1, 1)
        assert g13().squares == (1, -1, -1, -1)

    def test_dim(self):
        assert g_nn(2).dim == 16
        assert g13().dim == 16


class TestBladeProduct:
    def test_generator_squares(self):
        for i, sq in enumerate(SIG.squares):
            sign, mask = blade_product(1 << i, 1 << i, SIG)
            assert (sign, mask) == (sq, 0)

    def test_distinct_generators_anticommute(self):
        for i in range(SIG.m):
            for k in range(i + 1, SIG.m):
                s1, m1 = blade_product(1 << i, 1 << k, SIG)
                s2, m2 = blade_product(1 << k, 1 << i, SIG)
                assert m1 == m2 and s1 == -s2

    def test_known_case(self):
        # (e1 f1)(e1) = e1 f1 e1 = -e1 e1 f1 = -f1 in g(1,1)
        sig = g_nn(1)
        sign, mask = blade_product(0b11, 0b01, sig)
        assert (sign, mask) == (-1, 0b10)

    def test_mask_range_checked(self):
        with pytest.raises(RangeError):
            blade_product(1 << SIG.m, 0, SIG)


class TestProductStructure:
    @given(multivectors(), multivectors(), multivectors())
    def test_gp_associative(self, x, y, z):
        assert gp(gp(x, y), z) == gp(x, gp(y, z))

    @given(multivectors(), multivectors(), multivectors())
    def test_gp_distributes(self, x, y, z):
        assert gp(x, y + z) == gp(x, y) + gp(x, z)

    @given(vectors(), vectors())
    def test_vector_product_splits(self, x, y):
        # xy = x . y + x ^ y for vectors
        assert gp(x, y) == sym_dot(x, y) + wedge(x, y)

    @given(vectors(), vectors())
    def test_sym_dot_symmetric_scalar(self, x, y):
        d = sym_dot(x, y)
        assert d == sym_dot(y, x)
        assert d.grades() in (set(), {0})

    @given(vectors())
    def test_wedge_nilpotent_on_vectors(self, x):
        assert wedge(x, x) == Multivector.zero(SIG)

    @given(vectors(), vectors())
    def test_wedge_antisymmetric_on_vectors(self, x, y):
        assert wedge(x, y) == -wedge(y, x)

    @given(multivectors(), multivectors())
    def test_reverse_antiautomorphism(self, x, y):
        assert reverse(gp(x, y)) == gp(reverse(y), reverse(x))

    @given(multivectors())
    def test_reverse_involution(self, x):
        assert reverse(reverse(x)) == x

    @given(multivectors())
    def test_grade_projection_partitions(self, x):
        total = Multivector.zero(SIG)
        for r in range(SIG.m + 1):
            total = total + grade_project(x, r)
        assert total == x

    @given(vectors(), vectors())
    def test_anticommutator(self, x, y):
        assert anticommutator(x, y) == gp(x, y) + gp(y, x)

    def test_chain_helpers(self):
        gens = [Multivector.generator(SIG, i) for i in range(4)]
        assert gp_chain(gens) == gp(gp(gp(gens[0], gens[1]), gens[2]), gens[3])
        top = wedge_chain(gens)
        assert top.grades() == {4}

    def test_signature_mismatch_raises(self):
        with pytest.raises(SignatureMismatchError):
            gp(Multivector.generator(g3(), 0), Multivector.generator(g13(), 0))


class TestAccessors:
    def test_scalar_part_and_coeff(self):
        x = Multivector.scalar(SIG, Fraction(2, 3)) + \
            Multivector.blade(SIG, 0b11, Scalar.sqrt(2))
        assert x.scalar_part() == Scalar.of(Fraction(2, 3))
        assert x.coeff(0b11) == Scalar.sqrt(2)
        assert x.coeff(0b1000).is_zero()

    def test_is_vector(self):
        assert Multivector.generator(SIG, 1).is_vector()
        assert not gp(Multivector.generator(SIG, 0),
                      Multivector.generator(SIG, 1)).is_vector()

    def test_str_names_blades(self):
        x = gp(Multivector.generator(SIG, 0), Multivector.generator(SIG, 1))
        assert "e1*f1" in str(x)

    def test_truediv(self):
        x = Multivector.generator(SIG, 0)
        assert x / 2 == x.scale(Fraction(1, 2))


class TestJson:
    @given(multivectors())
    def test_roundtrip(self, x):
        assert Multivector.from_json(x.to_json()) == x

    def test_roundtrip_radical_coeffs(self):
        x = Multivector.blade(SIG, 0b101, Scalar.sqrt(6, coeff=Fraction(1, 2)))
        assert Multivector.from_json(x.to_json()) == x

    def test_blades_ascending_zero_based(self):
        x = Multivector.blade(SIG, 0b1010, Scalar.of(1))
        data = x.to_json()
        assert data["terms"][0]["blade"] == [1, 3]

    def test_signature_guard(self):
        x = Multivector.generator(g3(), 0)
        with pytest.raises(ValueError):
            Multivector.from_json(x.to_json(), sig=g13())
