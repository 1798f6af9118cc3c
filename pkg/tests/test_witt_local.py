"""Local nilpotent families, sign-matrix identifications, and the rank-8 table."""

from fractions import Fraction

import pytest

from wittkit.errors import RangeError, UnsupportedError
from wittkit.ga import Multivector, g_1n, gp, gp_chain, wedge_chain
from wittkit.scalars import Scalar
from wittkit.witt_local import (alpha_coeff, c8_complex_table,
                                c8_tabulated_coefficients,
                                check_frame_relations, check_local_relations,
                                complex_identification_g22, ef_from_c,
                                hadamard_identification, hadamard_nilpotents,
                                inv_alpha_coeff, make_local_witt,
                                no_identification_g12, pseudoscalar_identity)


class TestLocalFamilies:
    @pytest.mark.parametrize("m", range(2, 9))
    def test_relations(self, m):
        w = make_local_witt(m)
        assert len(w.c) == m
        assert check_local_relations(w).ok

    def test_m2_closed_forms(self):
        w = make_local_witt(2)
        sig = w.sig
        half = Fraction(1, 2)
        e1 = Multivector.generator(sig, 0)
        f1 = Multivector.generator(sig, 1)
        assert w.c[0] == (e1 + f1).scale(half)
        assert w.c[1] == (e1 - f1).scale(half)

    def test_range_guard(self):
        with pytest.raises(RangeError):
            make_local_witt(1)
        with pytest.raises(RangeError):
            make_local_witt(9)

    def test_cross_anticommutators_are_one(self):
        w = make_local_witt(5)
        one = Multivector.scalar(w.sig, 1)
        for i in range(5):
            for k in range(i + 1, 5):
                assert gp(w.c[i], w.c[k]) + gp(w.c[k], w.c[i]) == one

    def test_frame_square_formula(self):
        # (sum of r_i c_i)^2 = ((sum r)^2 - sum r^2) / 2 for any dual family
        w = make_local_witt(4)
        r = [3, -1, 2, 5]
        v = sum((w.c[i].scale(r[i]) for i in range(4)),
                Multivector.zero(w.sig))
        total = sum(r)
        want = Fraction(total * total - sum(x * x for x in r), 2)
        assert gp(v, v) == Multivector.scalar(w.sig, want)


class TestFrameRecovery:
    def test_alpha_values(self):
        assert alpha_coeff(2) == Scalar.of(-1)
        assert alpha_coeff(3) == Scalar.sqrt(3, coeff=Fraction(-1, 3))
        assert alpha_coeff(4) == Scalar.sqrt(6, coeff=Fraction(-1, 6))
        for k in range(2, 9):
            assert alpha_coeff(k) * inv_alpha_coeff(k) == Scalar.of(1)

    @pytest.mark.parametrize("m", range(2, 9))
    def test_frame_equals_generators(self, m):
        w = make_local_witt(m)
        frame = ef_from_c(w)
        gens = [Multivector.generator(w.sig, i) for i in range(m)]
        assert frame == gens

    def test_g17_lorentz_relations(self):
        frame = ef_from_c(make_local_witt(8))
        rep = check_frame_relations(frame, [1] + [-1] * 7)
        assert rep.ok

    def test_frame_checker_catches_wrong_square(self):
        frame = ef_from_c(make_local_witt(2))
        assert not check_frame_relations(frame, [1, 1]).ok


class TestHadamardIdentification:
    def test_k2_scales(self):
        fm = hadamard_identification(2)
        assert fm.scales == [Scalar.sqrt(6), Scalar.sqrt(2),
                             Scalar.sqrt(2), Scalar.sqrt(2)]

    def test_k3_scales(self):
        fm = hadamard_identification(3)
        assert fm.scales == [Scalar.sqrt(7, coeff=2)] + [Scalar.of(2)] * 7

    @pytest.mark.parametrize("k", [2, 3])
    def test_rows_and_sources(self, k):
        fm = hadamard_identification(k)
        assert fm.verify_rows()
        assert fm.verify_sources().ok
        assert fm.verify_frame().ok

    def test_k2_first_row_explicit(self):
        # sqrt(6) e1 equals the plain sum of the four nilpotents
        w = hadamard_nilpotents(2)
        e1 = Multivector.generator(w.sig, 0)
        total = sum(w.c, Multivector.zero(w.sig))
        assert e1.scale(Scalar.sqrt(6)) == total

    def test_depth_guard(self):
        with pytest.raises(UnsupportedError):
            hadamard_nilpotents(4)

    def test_recursion_family_is_not_the_hadamard_one(self):
        # the recursion-built family satisfies the same local relations but
        # does not sum to a multiple of e1
        w = make_local_witt(4)
        total = sum(w.c, Multivector.zero(w.sig))
        e1 = Multivector.generator(w.sig, 0)
        assert total != e1.scale(Scalar.sqrt(6))
        assert gp(total, total) == Multivector.scalar(w.sig, 6)


class TestPseudoscalarIdentity:
    def test_exact_equality(self):
        lhs, rhs = pseudoscalar_identity()
        assert lhs == rhs
        assert not lhs.is_zero()

    def test_wedge_is_scaled_top_blade(self):
        w = hadamard_nilpotents(3)
        top = wedge_chain(w.c)
        want = Multivector.blade(w.sig, (1 << 8) - 1,
                                 Scalar.sqrt(7, coeff=Fraction(-1, 16)))
        assert top == want

    def test_frame_product_is_top_blade(self):
        sig = g_1n(7)
        gens = [Multivector.generator(sig, i) for i in range(8)]
        assert gp_chain(gens) == Multivector.blade(sig, (1 << 8) - 1)


class TestNegativeSearch:
    def test_exhaustive_search_finds_nothing(self):
        rep = no_identification_g12()
        assert rep.ok
        assert rep.sign_matrices == 512
        assert rep.radicand_combos == 64
        assert rep.frames_found == 0
        assert rep.candidates_checked > 0

    def test_unit_examples(self):
        rep = no_identification_g12()
        assert ("(c1+c2+c3)/sqrt(3)", 1) in rep.unit_examples
        assert ("c1-c2", -1) in rep.unit_examples

    def test_unit_examples_verify(self):
        w = make_local_witt(3)
        sig = w.sig
        plus = sum(w.c, Multivector.zero(sig))
        assert gp(plus, plus) == Multivector.scalar(sig, 3)
        minus = w.c[0] - w.c[1]
        assert gp(minus, minus) == Multivector.scalar(sig, -1)


class TestComplexIdentification:
    def test_g22_rows_and_signature(self):
        fm = complex_identification_g22()
        assert fm.verify_rows()
        assert fm.expected_squares == [1, 1, -1, -1]
        assert fm.verify_frame().ok

    def test_second_target_carries_j(self):
        fm = complex_identification_g22()
        sig = fm.targets[0].sig
        f1 = Multivector.generator(sig, 1)
        assert fm.targets[1] == f1.scale(Scalar.j())


class TestC8Table:
    def test_entries_match_recursion(self):
        tab = c8_complex_table()
        assert list(tab.labels) == \
            ["e1", "f1", "f2", "jf3", "f4", "jf5", "f6", "jf7"]
        assert tab.entries == tab.recursion_forms

    def test_only_f4_tabulation_differs(self):
        tab = c8_complex_table()
        mismatch = [lab for lab, ent, tf in
                    zip(tab.labels, tab.entries, tab.tabulated_forms)
                    if ent != tf]
        assert mismatch == ["f4"]

    def test_f4_bad_square(self):
        # the printed coefficient makes f4 square to 1 - sqrt(2), not -1
        tab = c8_complex_table()
        i = tab.labels.index("f4")
        bad = tab.tabulated_forms[i]
        good = tab.entries[i]
        sig = tab.witt.sig
        assert gp(bad, bad) == \
            Multivector.scalar(sig, Scalar.of(1) - Scalar.sqrt(2))
        assert gp(good, good) == Multivector.scalar(sig, -1)

    def test_tabulated_coefficient_values(self):
        co = c8_tabulated_coefficients()
        assert co["f2"] == (Scalar.of(-1), Scalar.of(1))
        assert co["f6"] == (Scalar.sqrt(15, Fraction(-1, 15)),
                            Scalar.sqrt(15, Fraction(1, 3)))
        assert co["jf7"] == (Scalar.sqrt(-21, Fraction(-1, 21)),
                             Scalar.sqrt(-21, Fraction(2, 7)))
        # the bad value: sqrt(3)/2 instead of sqrt(6)/2 on c5
        assert co["f4"][1] == Scalar.sqrt(3, Fraction(1, 2))

    def test_pair_decomposition(self):
        tab = c8_complex_table()
        half = Fraction(1, 2)
        assert tab.a[0] == tab.witt.c[0]
        assert tab.b[0] == tab.witt.c[1]
        f2, jf3 = tab.entries[2], tab.entries[3]
        assert tab.a[1] == (jf3 + f2).scale(half)
        assert tab.b[1] == (jf3 - f2).scale(half)

    def test_pairs_satisfy_global_duality(self):
        assert c8_complex_table().duality().ok


class TestFrameMapSerialization:
    def test_json_shape(self):
        data = hadamard_identification(2).to_json()
        assert set(data) == {"scales", "signs", "rows"}
        assert len(data["rows"]) == 4
        assert {"label", "multivector"} == set(data["rows"][0])

    def test_latex_smoke(self):
        assert "pmatrix" in hadamard_identification(2).latex()
