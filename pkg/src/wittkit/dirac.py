"""Pauli and Dirac representations via spectral bases.

The 2x2 Pauli matrices come from viewing g(3) as a complexified g(1,1):
e := e1 and f := e1 e3 are a unit-square / minus-unit-square anticommuting
pair, and the coordinate matrices take entries in the center span{1, e123}.
The central pseudoscalar i = e123 has i^2 = -1 but is a blade, not the
scalar j; the two are kept distinct throughout.

The Dirac algebra g(1,3) gets two 4x4 complex representations: the standard
one from the idempotent u_pp = (1+g0)(1+j g12)/4 with borders in the rest
frame bivectors, and a second one transported from the g(2,2) spectral
basis by the substitution (27)-style pairing of gammas into nilpotents.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .ga import Multivector, g3, g13, g_nn, gp, gp_chain
from .scalars import Scalar
from .witt_global import (CentralMatrix, DualityReport, MvMatrix,
                          SpectralBasis, check_duality_relations)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@dataclass
class DiracFrame:
    gammas: list[Multivector]
    pseudoscalar: Multivector        # g0 g1 g2 g3, anticommutes with vectors
    rest: list[Multivector]          # e_k = g_k g0, k = 1, 2, 3


def dirac_frame() -> DiracFrame:
    sig = g13()
    gammas = [Multivector.generator(sig, i) for i in range(4)]
    pseudo = gp_chain(gammas)
    rest = [gp(gammas[k], gammas[0]) for k in (1, 2, 3)]
    return DiracFrame(gammas, pseudo, rest)


@dataclass
class DiracIdempotents:
    u_pp: Multivector
    u_pm: Multivector
    u_mp: Multivector
    u_mm: Multivector

    def all(self) -> list[Multivector]:
        return [self.u_pp, self.u_pm, self.u_mp, self.u_mm]


def dirac_idempotents(frame: DiracFrame | None = None) -> DiracIdempotents:
    """The four primitive idempotents (1 +- g0)(1 +- j g12)/4."""
    fr = frame or dirac_frame()
    sig = fr.gammas[0].sig
    one = Multivector.scalar(sig, 1)
    g0 = fr.gammas[0]
    jg12 = gp(fr.gammas[1], fr.gammas[2]).scale(Scalar.j())
    us = []
    for s0 in (1, -1):
        for s12 in (1, -1):
            us.append(gp(one + g0.scale(s0),
                         one + jg12.scale(s12)).scale(QUARTER))
    return DiracIdempotents(*us)


def idempotent_orders_agree(frame: DiracFrame | None = None) -> bool:
    """(1+g0)(1+j g12) = (1+j g12)(1+g0): the two factors commute."""
    fr = frame or dirac_frame()
    sig = fr.gammas[0].sig
    one = Multivector.scalar(sig, 1)
    left = one + fr.gammas[0]
    right = one + gp(fr.gammas[1], fr.gammas[2]).scale(Scalar.j())
    return gp(left, right) == gp(right, left)


def intertwining_relations(frame: DiracFrame | None = None) -> DualityReport:
    """e13 u_pp = u_pm e13, e3 u_pp = u_mp e3, e1 u_pp = u_mm e1."""
    fr = frame or dirac_frame()
    u = dirac_idempotents(fr)
    e1, _, e3 = fr.rest
    e13 = gp(e1, e3)
    rels = [
        ("e13 u_pp = u_pm e13", gp(e13, u.u_pp) == gp(u.u_pm, e13)),
        ("e3 u_pp = u_mp e3", gp(e3, u.u_pp) == gp(u.u_mp, e3)),
        ("e1 u_pp = u_mm e1", gp(e1, u.u_pp) == gp(u.u_mm, e1)),
    ]
    return DualityReport(rels)


# -- pauli -----------------------------------------------------------------


def pauli_spectral() -> tuple[SpectralBasis, list[CentralMatrix]]:
    """g(3) as 2x2 matrices over its center: returns the basis and [e1],[e2],[e3]."""
    sig = g3()
    e = Multivector.generator(sig, 0)
    f = gp(e, Multivector.generator(sig, 2))        # e1 e3, squares to -1
    a = (e + f).scale(HALF)
    b = (e - f).scale(HALF)
    one = Multivector.scalar(sig, 1)
    iota = Multivector.blade(sig, 0b111)
    sb = SpectralBasis([one, a], gp(b, a), [one, b], central_unit=iota,
                       row_labels=["1", "a"], col_labels=["1", "b"])
    mats = [sb.mv_to_matrix(Multivector.generator(sig, k)) for k in range(3)]
    return sb, mats


@dataclass
class ImpostorReport:
    """Outcome of swapping the central blade i for the scalar j in [e2]."""

    equals_true_matrix: bool      # impostor vs the real [e2]
    true_product_ok: bool         # [e2][f] = [e2 f]
    impostor_product_ok: bool     # impostor [f] = [e2 f]

    @property
    def demonstrates_breakage(self) -> bool:
        return (not self.equals_true_matrix and self.true_product_ok
                and not self.impostor_product_ok)


def pauli_impostor_check() -> ImpostorReport:
    """The j-entried lookalike of [e2] is not a g(3) coordinate matrix."""
    sb, mats = pauli_spectral()
    sig = sb.sig
    e2 = Multivector.generator(sig, 1)
    f = gp(Multivector.generator(sig, 0), Multivector.generator(sig, 2))
    zero = Multivector.zero(sig)
    pj = Multivector.scalar(sig, Scalar.j())
    impostor = CentralMatrix([[zero, -pj], [pj, zero]])
    f_mat = sb.mv_to_matrix(f)
    product = sb.mv_to_matrix(gp(e2, f))            # = -i as a multivector
    return ImpostorReport(
        equals_true_matrix=impostor == mats[1],
        true_product_ok=mats[1].matmul(f_mat) == product,
        impostor_product_ok=impostor.matmul(f_mat) == product,
    )


def g11_embedding_check() -> bool:
    """(1, e, f, ef) -> (1, e1, e1e3, e3) respects all 16 products."""
    s11 = g_nn(1)
    s3 = g3()
    e1_3 = Multivector.generator(s3, 0)
    e3_3 = Multivector.generator(s3, 2)
    phi = {
        0b00: Multivector.scalar(s3, 1),
        0b01: e1_3,
        0b10: gp(e1_3, e3_3),
        0b11: e3_3,
    }
    # source blade masks: e -> (e+f)-style generators of g(1,1) directly
    e = Multivector.generator(s11, 0)
    f = Multivector.generator(s11, 1)
    src = {0b00: Multivector.scalar(s11, 1), 0b01: e, 0b10: f, 0b11: gp(e, f)}

    def lift(x: Multivector) -> Multivector:
        acc = Multivector.zero(s3)
        for mask, coeff in x.terms.items():
            acc = acc + phi[mask].scale(coeff)
        return acc

    for ma in src:
        for mb in src:
            if lift(gp(src[ma], src[mb])) != gp(phi[ma], phi[mb]):
                return False
    return True


# -- dirac, standard representation ----------------------------------------


def dirac_spectral_standard() -> tuple[SpectralBasis, list[MvMatrix]]:
    fr = dirac_frame()
    u = dirac_idempotents(fr)
    sig = fr.gammas[0].sig
    one = Multivector.scalar(sig, 1)
    e1, _, e3 = fr.rest
    e13 = gp(e1, e3)
    rows = [one, e13, e3, e1]
    cols = [one, -e13, e3, e1]
    sb = SpectralBasis(rows, u.u_pp, cols,
                       row_labels=["1", "e13", "e3", "e1"],
                       col_labels=["1", "-e13", "e3", "e1"])
    mats = [sb.mv_to_matrix(g) for g in fr.gammas]
    return sb, mats


# -- dirac, new representation from the neutral-signature basis ------------


@dataclass
class NewDiracData:
    frame: DiracFrame
    a: list[Multivector]             # a1, a2
    b: list[Multivector]             # b1, b2
    u1: Multivector
    u2: Multivector
    basis: SpectralBasis
    gamma_mats: list[MvMatrix]


def new_witt_pair(frame: DiracFrame | None = None):
    fr = frame or dirac_frame()
    g0, g1, g2, g3v = fr.gammas
    j = Scalar.j()
    a1 = (g0 - g3v).scale(HALF)
    a2 = (g2.scale(j) + g1).scale(HALF)
    b1 = (g0 + g3v).scale(HALF)
    b2 = (g2.scale(j) - g1).scale(HALF)
    return fr, [a1, a2], [b1, b2]


def dirac_spectral_new() -> NewDiracData:
    fr, a, b = new_witt_pair()
    sig = fr.gammas[0].sig
    one = Multivector.scalar(sig, 1)
    u1 = gp(b[0], a[0])
    u2 = gp(b[1], a[1])
    rows = [one, a[0], a[1], gp(a[0], a[1])]
    cols = [one, b[0], b[1], gp(b[1], b[0])]
    sb = SpectralBasis(rows, gp(u1, u2), cols,
                       row_labels=["1", "a1", "a2", "a12"],
                       col_labels=["1", "b1", "b2", "b21"])
    mats = [sb.mv_to_matrix(g) for g in fr.gammas]
    return NewDiracData(fr, a, b, u1, u2, sb, mats)


def new_border_form(data: NewDiracData | None = None) -> SpectralBasis:
    """Same array, bordered by (1, g0, j g2, -j e2) and (1, g0, j g2, j e2)."""
    d = data or dirac_spectral_new()
    fr = d.frame
    sig = fr.gammas[0].sig
    one = Multivector.scalar(sig, 1)
    j = Scalar.j()
    g0, g2 = fr.gammas[0], fr.gammas[2]
    e2 = fr.rest[1]
    rows = [one, g0, g2.scale(j), e2.scale(-j)]
    cols = [one, g0, g2.scale(j), e2.scale(j)]
    return SpectralBasis(rows, gp(d.u1, d.u2), cols,
                         row_labels=["1", "g0", "jg2", "-je2"],
                         col_labels=["1", "g0", "jg2", "je2"])


def new_rep_extra_matrices(data: NewDiracData | None = None) -> dict[str, MvMatrix]:
    """The nilpotent-pair and rest-frame coordinate matrices of the new basis."""
    d = data or dirac_spectral_new()
    sb = d.basis
    out = {
        "a1": sb.mv_to_matrix(d.a[0]),
        "a2": sb.mv_to_matrix(d.a[1]),
        "b1": sb.mv_to_matrix(d.b[0]),
        "b2": sb.mv_to_matrix(d.b[1]),
    }
    for k, ek in enumerate(d.frame.rest, 1):
        out[f"e{k}"] = sb.mv_to_matrix(ek)
    return out


class DiracRep(str, Enum):
    STANDARD = "standard"
    NEW = "new"


def gamma_anticommutation_check(rep: DiracRep | str) -> DualityReport:
    """{g_mu, g_nu} = 2 eta_{mu nu}, at multivector and matrix level."""
    if isinstance(rep, str):
        rep = DiracRep(rep)
    if rep is DiracRep.STANDARD:
        sb, mats = dirac_spectral_standard()
        fr = dirac_frame()
    else:
        d = dirac_spectral_new()
        sb, mats, fr = d.basis, d.gamma_mats, d.frame
    sig = fr.gammas[0].sig
    eta = [1, -1, -1, -1]
    rels = []
    ident = MvMatrix.identity(4)
    for mu in range(4):
        for nu in range(mu, 4):
            want = 2 * eta[mu] if mu == nu else 0
            mv_ok = (gp(fr.gammas[mu], fr.gammas[nu])
                     + gp(fr.gammas[nu], fr.gammas[mu])
                     == Multivector.scalar(sig, want))
            mat = mats[mu].matmul(mats[nu]) + mats[nu].matmul(mats[mu])
            mat_ok = mat == ident.scale(want)
            rels.append((f"{{g{mu}, g{nu}}} = {want}", mv_ok and mat_ok))
    return DualityReport(rels)


def pseudoscalar_anticommutes(frame: DiracFrame | None = None) -> bool:
    fr = frame or dirac_frame()
    zero = Multivector.zero(fr.gammas[0].sig)
    return all(gp(fr.pseudoscalar, g) + gp(g, fr.pseudoscalar) == zero
               for g in fr.gammas)


def new_duality_check() -> DualityReport:
    """The transported pair satisfies the neutral-signature duality rules."""
    _, a, b = new_witt_pair()
    return check_duality_relations(a, b)
