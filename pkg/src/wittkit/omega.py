"""Recursive +-1 sign matrices with orthogonal rows.

Two intertwined families, "plain" and "minus", are defined on sizes 2**k:

    plain(2)  = [[1, 1], [1, -1]]          minus(2) = [[1, 1], [-1, 1]]
    plain(2N) = [[plain,  minus ],         minus(2N) = [[minus,  plain],
                 [plain, -minus ]]                      [-plain,  minus]]

Both satisfy W W^T = 2**k * I, so they are scaled Hadamard matrices; they
arise as the change-of-basis between an orthonormal frame and a null frame
whose elements pairwise half-anticommute.  Small complex variants (entries
in {1,-1,j,-j}) exist for k = 1, 2 and satisfy W W* = 2**k * I.

The butterfly in fast_apply evaluates W @ x in O(k 2**k) exact operations.
"""

from __future__ import annotations

from enum import Enum

from .errors import DimensionMismatchError, RangeError, UnsupportedError
from .scalars import Scalar

MAX_K_REAL = 6
MAX_K_DET = 5


class OmegaVariant(str, Enum):
    PLAIN = "plain"
    MINUS = "minus"
    COMPLEX_PLAIN = "complex-plain"
    COMPLEX_MINUS = "complex-minus"


def _block(tl, tr, bl, br):
    n = len(tl)
    out = []
    for i in range(n):
        out.append(tl[i] + tr[i])
    for i in range(n):
        out.append(bl[i] + br[i])
    return out


def _real_pair(k: int):
    plain = [[1, 1], [1, -1]]
    minus = [[1, 1], [-1, 1]]
    for _ in range(k - 1):
        neg_p = [[-x for x in row] for row in plain]
        neg_m = [[-x for x in row] for row in minus]
        plain, minus = (_block(plain, minus, plain, neg_m),
                        _block(minus, plain, neg_p, minus))
    return plain, minus


# j is encoded as the Scalar unit; the k = 1, 2 complex matrices are the only
# members of the family (larger blocks would mix real and complex rows, and
# the recursion no longer closes).
def _complex_rows(k: int, variant: OmegaVariant):
    one, j = Scalar.of(1), Scalar.j()
    if k == 1:
        if variant is OmegaVariant.COMPLEX_PLAIN:
            return [[one, one], [j, -j]]
        return [[one, one], [-j, j]]
    c2p = [[one, one], [j, -j]]
    c2m = [[one, one], [-j, j]]
    r2p = [[one, one], [one, -one]]
    r2m = [[one, one], [-one, one]]
    if variant is OmegaVariant.COMPLEX_PLAIN:
        return _block(c2p, c2m, r2p, [[-x for x in row] for row in r2m])
    return _block(c2m, c2p, [[-x for x in row] for row in r2p], r2m)


class OmegaMatrix:
    """Sign matrix with exact entries; keeps an integer fast path when possible."""

    __slots__ = ("rows", "int_rows", "k", "variant")

    def __init__(self, rows, k: int, variant: OmegaVariant):
        self.k = k
        self.variant = variant
        if rows and isinstance(rows[0][0], int):
            self.int_rows = [list(r) for r in rows]
            self.rows = [[Scalar.of(x) for x in r] for r in rows]
        else:
            self.int_rows = None
            self.rows = [list(r) for r in rows]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def transpose(self) -> "OmegaMatrix":
        if self.int_rows is not None:
            return OmegaMatrix([list(c) for c in zip(*self.int_rows)],
                               self.k, self.variant)
        return OmegaMatrix([list(c) for c in zip(*self.rows)], self.k, self.variant)

    def conj_transpose(self) -> "OmegaMatrix":
        return OmegaMatrix([[e.conjugate() for e in col] for col in zip(*self.rows)],
                           self.k, self.variant)

    def matmul_int(self, other: "OmegaMatrix"):
        """Integer product of the int fast paths; None if either is complex."""
        if self.int_rows is None or other.int_rows is None:
            return None
        if self.dim != other.dim:
            raise DimensionMismatchError("matrix sizes differ")
        cols = list(zip(*other.int_rows))
        return [[sum(r[t] * c[t] for t in range(self.dim)) for c in cols]
                for r in self.int_rows]

    def matmul(self, other: "OmegaMatrix"):
        if self.dim != other.dim:
            raise DimensionMismatchError("matrix sizes differ")
        cols = list(zip(*other.rows))
        return [[sum((r[t] * c[t] for t in range(self.dim)), Scalar())
                 for c in cols] for r in self.rows]

    def dense_apply(self, xs: list[Scalar]) -> list[Scalar]:
        if len(xs) != self.dim:
            raise DimensionMismatchError("vector length does not match matrix")
        return [sum((r[t] * xs[t] for t in range(self.dim)), Scalar())
                for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, OmegaMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return f"OmegaMatrix(k={self.k}, variant={self.variant.value}, dim={self.dim})"

    def to_json(self) -> dict:
        return {"k": self.k, "variant": self.variant.value, "dim": self.dim,
                "entries": [[e.to_json() for e in row] for row in self.rows]}

    def to_csv(self) -> str:
        if self.int_rows is not None:
            return "\n".join(",".join(str(x) for x in row) for row in self.int_rows) + "\n"
        return "\n".join(",".join(str(e) for e in row) for row in self.rows) + "\n"

    def latex(self) -> str:
        if self.int_rows is not None:
            body = " \\\\\n".join(" & ".join(str(x) for x in row)
                                  for row in self.int_rows)
        else:
            body = " \\\\\n".join(" & ".join(e.latex() for e in row)
                                  for row in self.rows)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def omega(k: int, variant: OmegaVariant | str = OmegaVariant.PLAIN) -> OmegaMatrix:
    if isinstance(variant, str):
        variant = OmegaVariant(variant)
    if variant in (OmegaVariant.PLAIN, OmegaVariant.MINUS):
        if not 1 <= k <= MAX_K_REAL:
            raise RangeError(f"real sign matrices are built for 1 <= k <= {MAX_K_REAL}")
        plain, minus = _real_pair(k)
        return OmegaMatrix(plain if variant is OmegaVariant.PLAIN else minus,
                           k, variant)
    if not 1 <= k <= 2:
        raise UnsupportedError("complex sign matrices exist only for k = 1, 2")
    return OmegaMatrix(_complex_rows(k, variant), k, variant)


def gram_check(k: int, variant: OmegaVariant | str = OmegaVariant.PLAIN) -> bool:
    """W W^T (or W W* in the complex case) equals 2**k times the identity."""
    if isinstance(variant, str):
        variant = OmegaVariant(variant)
    w = omega(k, variant)
    n = w.dim
    if w.int_rows is not None:
        g = w.matmul_int(w.transpose())
        return all(g[i][j] == (n if i == j else 0)
                   for i in range(n) for j in range(n))
    g = w.matmul(w.conj_transpose())
    want = Scalar.of(n)
    zero = Scalar()
    return all(g[i][j] == (want if i == j else zero)
               for i in range(n) for j in range(n))


def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free integer determinant (Bareiss elimination)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatchError("matrix must be square")
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for c in range(n - 1):
        if m[c][c] == 0:
            for r in range(c + 1, n):
                if m[r][c] != 0:
                    m[c], m[r] = m[r], m[c]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(c + 1, n):
            for c2 in range(c + 1, n):
                m[r][c2] = (m[r][c2] * m[c][c] - m[r][c] * m[c][c2]) // prev
            m[r][c] = 0
        prev = m[c][c]
    return sign * m[n - 1][n - 1]


def det_omega(k: int, variant: OmegaVariant | str = OmegaVariant.PLAIN) -> int:
    if isinstance(variant, str):
        variant = OmegaVariant(variant)
    if variant not in (OmegaVariant.PLAIN, OmegaVariant.MINUS):
        raise UnsupportedError("determinants are computed for the real variants")
    if not 1 <= k <= MAX_K_DET:
        raise RangeError(f"determinants are computed for 1 <= k <= {MAX_K_DET}")
    return bareiss_det(omega(k, variant).int_rows)


def fast_apply(k: int, variant: OmegaVariant | str, xs: list) -> list:
    """Butterfly evaluation of omega(k, variant) @ xs without forming the matrix.

    Entries may be Scalars, Fractions or ints; the result entries are Scalars
    when any input is, otherwise exact Fractions/ints.
    """
    if isinstance(variant, str):
        variant = OmegaVariant(variant)
    if variant not in (OmegaVariant.PLAIN, OmegaVariant.MINUS):
        # the complex family stops at k = 2; a dense product is already cheap
        return omega(k, variant).dense_apply(
            [x if isinstance(x, Scalar) else Scalar.of(x) for x in xs])
    if not 1 <= k <= MAX_K_REAL:
        raise RangeError(f"real sign matrices are built for 1 <= k <= {MAX_K_REAL}")
    if len(xs) != 1 << k:
        raise DimensionMismatchError("vector length must be 2**k")

    # each level needs both variants of both halves, so compute the pair at once
    def apply_both(level: int, v: list) -> tuple[list, list]:
        if level == 1:
            s, d = v[0] + v[1], v[0] - v[1]
            return [s, d], [s, v[1] - v[0]]
        h = len(v) // 2
        pt, mt = apply_both(level - 1, v[:h])
        pb, mb = apply_both(level - 1, v[h:])
        plain = [a + b for a, b in zip(pt, mb)] + [a - b for a, b in zip(pt, mb)]
        minus = [a + b for a, b in zip(mt, pb)] + [b - a for a, b in zip(pt, mb)]
        return plain, minus

    p, m = apply_both(k, list(xs))
    return p if variant is OmegaVariant.PLAIN else m
