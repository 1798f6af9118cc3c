"""Locally dual nilpotent families c_1..c_m and their frame identifications.

Local duality means every distinct pair anticommutes to exactly 1:
c_i c_j + c_j c_i = 1, c_i^2 = 0.  Any such family generates the Lorentz
algebra g(1, m-1): e_1 = c_1+c_2, f_1 = c_1-c_2, and for k >= 2

    f_k = alpha_k (C_k - (k-1) c_{k+1}),   alpha_k = -sqrt(2)/sqrt(k(k-1)),

with C_k = c_1+..+c_k, gives an orthonormal frame.  The construction
inverts: c_{k+1} = (C_k - f_k/alpha_k)/(k-1).

For m = 4 and m = 8 there is a second, symmetric family: the frame itself
is a scaled sign-matrix image of a locally dual family, with the sign
matrices from the omega module.  No such identification exists for m = 3;
no_identification_g12 proves that by exhaustion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import RangeError, UnsupportedError
from .ga import (Multivector, Signature, anticommutator, g_1n, gp, gp_chain,
                 wedge_chain)
from .omega import OmegaVariant, omega
from .scalars import Scalar
from .witt_global import DualityReport, check_duality_relations


def alpha_coeff(k: int) -> Scalar:
    """alpha_k = -sqrt(2)/sqrt(k(k-1)) as a single radical term."""
    if k < 2:
        raise RangeError("alpha_k is defined for k >= 2")
    t = k * (k - 1)
    return Scalar.sqrt(2 * t, coeff=Fraction(-1, t))


def inv_alpha_coeff(k: int) -> Scalar:
    if k < 2:
        raise RangeError("alpha_k is defined for k >= 2")
    t = k * (k - 1)
    # t is even, so t/2 is an integer radicand
    return -Scalar.sqrt(t // 2)


@dataclass
class LocalWitt:
    """m pairwise locally-dual nilpotents spanning grade 1 of g(1, m-1)."""

    m: int
    sig: Signature
    c: list[Multivector]
    complexified: bool = False


def make_local_witt(m: int, complexified: bool = False) -> LocalWitt:
    if not 2 <= m <= 8:
        raise RangeError("local witt families are built for 2 <= m <= 8")
    sig = g_1n(m - 1)
    half = Fraction(1, 2)
    e1 = Multivector.generator(sig, 0)
    f1 = Multivector.generator(sig, 1)
    c = [(e1 + f1).scale(half), (e1 - f1).scale(half)]
    for k in range(2, m):
        ck_sum = c[0]
        for v in c[1:k]:
            ck_sum = ck_sum + v
        fk = Multivector.generator(sig, k)
        nxt = (ck_sum - fk.scale(inv_alpha_coeff(k))).scale(Fraction(1, k - 1))
        c.append(nxt)
    return LocalWitt(m, sig, c, complexified)


def check_local_relations(w: LocalWitt) -> DualityReport:
    """c_i^2 = 0, every distinct pair anticommutes to 1, top wedge nonzero."""
    rels = []
    one = Multivector.scalar(w.sig, 1)
    zero = Multivector.zero(w.sig)
    for i, v in enumerate(w.c, 1):
        rels.append((f"c{i}^2 = 0", gp(v, v) == zero))
    for i in range(w.m):
        for k in range(i + 1, w.m):
            rels.append((f"c{i+1} c{k+1} + c{k+1} c{i+1} = 1",
                         anticommutator(w.c[i], w.c[k]) == one))
    rels.append((f"c1^...^c{w.m} != 0", bool(wedge_chain(w.c))))
    return DualityReport(rels)


def ef_from_c(w: LocalWitt) -> list[Multivector]:
    """The orthonormal frame (e1, f1, .., f_{m-1}) generated by the family.

    For a family built by make_local_witt this returns the preset
    generators themselves, exactly.
    """
    out = [w.c[0] + w.c[1], w.c[0] - w.c[1]]
    ck_sum = w.c[0] + w.c[1]
    for k in range(2, w.m):
        fk = (ck_sum - w.c[k].scale(k - 1)).scale(alpha_coeff(k))
        out.append(fk)
        ck_sum = ck_sum + w.c[k]
    return out


def check_frame_relations(frame: list[Multivector],
                          squares: list[int],
                          labels: list[str] | None = None) -> DualityReport:
    """Pairwise anticommutation plus the prescribed generator squares."""
    if labels is None:
        labels = [f"v{i+1}" for i in range(len(frame))]
    rels = []
    zero = Multivector.zero(frame[0].sig)
    for v, q, name in zip(frame, squares, labels):
        rels.append((f"{name}^2 = {q}",
                     gp(v, v) == Multivector.scalar(v.sig, q)))
    for i in range(len(frame)):
        for k in range(i + 1, len(frame)):
            rels.append((f"{labels[i]} {labels[k]} anticommute",
                         anticommutator(frame[i], frame[k]) == zero))
    return DualityReport(rels)


# -- sign-matrix identifications -------------------------------------------


@dataclass
class FrameMap:
    """Exact identity scales[r] * targets[r] = sum_s signs[r][s] * sources[s].

    sources is a locally dual nilpotent family, targets an orthonormal frame
    with the prescribed squares; signs entries are 0, +-1 or +-j.
    """

    scales: list[Scalar]
    signs: list[list[Scalar]]
    sources: list[Multivector]
    targets: list[Multivector]
    source_labels: list[str]
    target_labels: list[str]
    expected_squares: list[int]

    def row_combination(self, r: int) -> Multivector:
        acc = Multivector.zero(self.sources[0].sig)
        for s, src in enumerate(self.sources):
            coeff = self.signs[r][s]
            if coeff:
                acc = acc + src.scale(coeff)
        return acc

    def verify_rows(self) -> bool:
        return all(self.targets[r].scale(self.scales[r]) == self.row_combination(r)
                   for r in range(len(self.targets)))

    def verify_frame(self) -> DualityReport:
        return check_frame_relations(self.targets, self.expected_squares,
                                     self.target_labels)

    def verify_sources(self) -> DualityReport:
        lw = LocalWitt(len(self.sources), self.sources[0].sig,
                       list(self.sources))
        return check_local_relations(lw)

    def to_json(self) -> dict:
        return {"scales": [s.to_json() for s in self.scales],
                "signs": [[e.to_json() for e in row] for row in self.signs],
                "rows": [{"label": lab, "multivector": t.to_json()}
                         for lab, t in zip(self.target_labels, self.targets)]}

    def latex(self) -> str:
        lhs = " \\\\ ".join(f"{s.latex()}\\,{lab}"
                            for s, lab in zip(self.scales, self.target_labels))
        mat = " \\\\\n".join(" & ".join(e.latex() for e in row)
                             for row in self.signs)
        rhs = " \\\\ ".join(self.source_labels)
        return (f"\\begin{{pmatrix}}{lhs}\\end{{pmatrix}} = "
                f"\\begin{{pmatrix}}\n{mat}\n\\end{{pmatrix}} "
                f"\\begin{{pmatrix}}{rhs}\\end{{pmatrix}}")


def _hadamard_scales(k: int) -> list[Scalar]:
    n = 1 << k
    # row of ones squares to (n^2 - n)/2, zero-sum rows to -n/2
    return [Scalar.sqrt(n * (n - 1) // 2)] + [Scalar.sqrt(n // 2)] * (n - 1)


def hadamard_nilpotents(k: int, complexified: bool = False) -> LocalWitt:
    """Solve the sign-matrix system for the c's: c = (1/2^k) W^T (scaled frame)."""
    if k not in (2, 3):
        raise UnsupportedError("sign-matrix identifications exist for k = 2, 3")
    n = 1 << k
    sig = g_1n(n - 1)
    frame = [Multivector.generator(sig, i) for i in range(n)]
    scales = _hadamard_scales(k)
    w = omega(k, OmegaVariant.PLAIN).int_rows
    scaled = [frame[r].scale(scales[r]) for r in range(n)]
    inv = Fraction(1, n)
    c = []
    for i in range(n):
        acc = Multivector.zero(sig)
        for r in range(n):
            acc = acc + scaled[r].scale(w[r][i])
        c.append(acc.scale(inv))
    return LocalWitt(n, sig, c, complexified)


def hadamard_identification(k: int) -> FrameMap:
    """The frame of g(1, 2^k - 1) as scaled sign combinations of nilpotents."""
    lw = hadamard_nilpotents(k)
    n = lw.m
    frame = [Multivector.generator(lw.sig, i) for i in range(n)]
    w = omega(k, OmegaVariant.PLAIN).int_rows
    fm = FrameMap(
        scales=_hadamard_scales(k),
        signs=[[Scalar.of(x) for x in row] for row in w],
        sources=lw.c,
        targets=frame,
        source_labels=[f"c{i+1}" for i in range(n)],
        target_labels=["e1"] + [f"f{i}" for i in range(1, n)],
        expected_squares=[1] + [-1] * (n - 1),
    )
    if not fm.verify_rows():
        raise RuntimeError("sign-matrix identity failed to close")
    return fm


def pseudoscalar_identity() -> tuple[Multivector, Multivector]:
    """Both routes to the top blade of g(1,7).

    Returns (lhs, rhs) with lhs = 2^8 sqrt(7) e1 f1 .. f7 computed as a
    geometric product of the frame, rhs = -2^12 c1^..^c8 computed as a wedge
    of the k=3 nilpotents; they are equal.
    """
    lw = hadamard_nilpotents(3)
    frame = [Multivector.generator(lw.sig, i) for i in range(8)]
    lhs = gp_chain(frame).scale(Scalar.sqrt(7, coeff=Fraction(256)))
    rhs = wedge_chain(lw.c).scale(-4096)
    return lhs, rhs


def complex_identification_g22() -> FrameMap:
    """Signature (2,2) from the complexified m=4 family: j on the f1 row."""
    lw = hadamard_nilpotents(2, complexified=True)
    sig = lw.sig
    j = Scalar.j()
    frame = [Multivector.generator(sig, i) for i in range(4)]
    targets = [frame[0], frame[1].scale(j), frame[2], frame[3]]
    w = omega(2, OmegaVariant.COMPLEX_PLAIN)
    fm = FrameMap(
        scales=_hadamard_scales(2),
        signs=[list(row) for row in w.rows],
        sources=lw.c,
        targets=targets,
        source_labels=[f"c{i+1}" for i in range(4)],
        target_labels=["e1", "jf1", "f2", "f3"],
        expected_squares=[1, 1, -1, -1],
    )
    if not fm.verify_rows():
        raise RuntimeError("sign-matrix identity failed to close")
    return fm


# -- negative search in g(1,2) ---------------------------------------------


def _rational_sqrt(q: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass
class NegativeSearchReport:
    sign_matrices: int
    radicand_combos: int
    candidates_checked: int
    frames_found: int
    unit_examples: list[tuple[str, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.frames_found == 0


def no_identification_g12() -> NegativeSearchReport:
    """Exhaustive proof that the m=4 identification has no m=3 analogue.

    Tries every 3x3 sign matrix (entries +-1) and per-row monomial scaling
    lambda*sqrt(d), d in {1,2,3,6}, lambda a positive rational, asking for an
    orthonormal g(1,2) frame: one square +1, two squares -1, all pairs
    anticommuting.  None exists, even though single unit vectors do.
    """
    lw = make_local_witt(3)
    c = lw.c
    radicands = (1, 2, 3, 6)
    zero = Multivector.zero(lw.sig)

    found = 0
    checked = 0
    for bits in range(1 << 9):
        rows_signs = [[1 if bits >> (3 * r + s) & 1 else -1 for s in range(3)]
                      for r in range(3)]
        rows = [c[0].scale(rs[0]) + c[1].scale(rs[1]) + c[2].scale(rs[2])
                for rs in rows_signs]
        squares = [gp(v, v).scalar_part().as_fraction() for v in rows]
        anti_ok = all(anticommutator(rows[i], rows[k]) == zero
                      for i in range(3) for k in range(i + 1, 3))
        for d0 in radicands:
            for d1 in radicands:
                for d2 in radicands:
                    checked += 1
                    if not anti_ok:
                        continue
                    ds = (d0, d1, d2)
                    # some row plays e1 (square +1), the other two play f
                    for plus in range(3):
                        good = True
                        for r in range(3):
                            target = 1 if r == plus else -1
                            q = squares[r]
                            if not q:
                                good = False
                                break
                            lam_sq = Fraction(target, 1) / (q * ds[r])
                            if _rational_sqrt(lam_sq) is None:
                                good = False
                                break
                        if good:
                            found += 1
                            break
    report = NegativeSearchReport(
        sign_matrices=1 << 9,
        radicand_combos=len(radicands) ** 3,
        candidates_checked=checked,
        frames_found=found,
    )
    s3 = (c[0] + c[1] + c[2]).scale(Scalar.sqrt(3, coeff=Fraction(1, 3)))
    if gp(s3, s3) == Multivector.scalar(lw.sig, 1):
        report.unit_examples.append(("(c1+c2+c3)/sqrt(3)", 1))
    d12 = c[0] - c[1]
    if gp(d12, d12) == Multivector.scalar(lw.sig, -1):
        report.unit_examples.append(("c1-c2", -1))
    return report


# -- the complexified m = 8 table ------------------------------------------


@dataclass
class C8Table:
    """The eight complexified frame elements of g(1,7) and their nilpotent forms.

    labels pair each frame element with its closed form in C_k = c_1+..+c_k
    and c_{k+1}; elements at odd k >= 3 carry a factor j so that the eight
    squares alternate through signature (4,4).  The a/b lists are the four
    globally dual pairs assembled from the table.
    """

    witt: LocalWitt
    labels: list[str]
    entries: list[Multivector]
    recursion_forms: list[Multivector]
    tabulated_forms: list[Multivector]
    a: list[Multivector]
    b: list[Multivector]

    def rows(self) -> list[tuple[str, Multivector]]:
        return list(zip(self.labels, self.entries))

    def duality(self) -> DualityReport:
        return check_duality_relations(self.a, self.b)


# closed-form coefficients (x on C_k, y on c_{k+1}) as tabulated; the f4 row
# is reproduced as printed even though its y does not match the recursion
_C8_TABULATED = {
    "f2": (Scalar.of(-1), Scalar.of(1)),
    "jf3": (Scalar.sqrt(-3, Fraction(-1, 3)), Scalar.sqrt(-3, Fraction(2, 3))),
    "f4": (Scalar.sqrt(6, Fraction(-1, 6)), Scalar.sqrt(3, Fraction(1, 2))),
    "jf5": (Scalar.sqrt(-10, Fraction(-1, 10)), Scalar.sqrt(-10, Fraction(2, 5))),
    "f6": (Scalar.sqrt(15, Fraction(-1, 15)), Scalar.sqrt(15, Fraction(1, 3))),
    "jf7": (Scalar.sqrt(-21, Fraction(-1, 21)), Scalar.sqrt(-21, Fraction(2, 7))),
}


def c8_tabulated_coefficients() -> dict[str, tuple[Scalar, Scalar]]:
    return dict(_C8_TABULATED)


def c8_complex_table() -> C8Table:
    lw = make_local_witt(8, complexified=True)
    sig = lw.sig
    j = Scalar.j()
    half = Fraction(1, 2)

    gens = [Multivector.generator(sig, i) for i in range(8)]
    labels = ["e1", "f1", "f2", "jf3", "f4", "jf5", "f6", "jf7"]
    entries = [gens[0], gens[1]]
    for k in range(2, 8):
        g = gens[k]
        entries.append(g.scale(j) if k % 2 == 1 else g)

    csum = [lw.c[0]]
    for v in lw.c[1:]:
        csum.append(csum[-1] + v)

    recursion_forms = [lw.c[0] + lw.c[1], lw.c[0] - lw.c[1]]
    tabulated_forms = list(recursion_forms)
    for k in range(2, 8):
        base = csum[k - 1] - lw.c[k].scale(k - 1)   # C_k - (k-1) c_{k+1}
        coeff = alpha_coeff(k)
        if k % 2 == 1:
            coeff = coeff * j
        recursion_forms.append(base.scale(coeff))
        x, y = _C8_TABULATED[labels[k]]
        tabulated_forms.append(csum[k - 1].scale(x) + lw.c[k].scale(y))

    a = [lw.c[0]]
    b = [lw.c[1]]
    for i in (3, 5, 7):                              # (f_{i-1}, jf_i) pairs
        fe, jf = entries[i - 1], entries[i]
        a.append((jf + fe).scale(half))
        b.append((jf - fe).scale(half))
    return C8Table(lw, labels, entries, recursion_forms, tabulated_forms, a, b)
