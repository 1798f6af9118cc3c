"""Geometric algebra kernel over exact scalars.

Basis blades are bitmasks over the generator list: bit i set means generator i
is a factor, written in ascending index order.  Products are computed by
counting transpositions and applying the metric square of each shared
generator; coefficients live in the exact scalar ring, so every identity in
this package is checked with zero floating point error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotAVectorError, RangeError, SignatureMismatchError
from .scalars import Scalar

MAX_GENERATORS = 12


@dataclass(frozen=True)
class Signature:
    """Ordered generator metric: squares[i] is +1 or -1 for generator i."""

    squares: tuple[int, ...]
    name: str = ""
    gen_names: tuple[str, ...] = ()
    latex_names: tuple[str, ...] = ()

    def __post_init__(self):
        if not 1 <= len(self.squares) <= MAX_GENERATORS:
            raise RangeError(f"supported generator counts are 1..{MAX_GENERATORS}")
        if any(s not in (1, -1) for s in self.squares):
            raise ValueError("generator squares must be +1 or -1")
        if not self.gen_names:
            object.__setattr__(self, "gen_names",
                               tuple(f"x{i}" for i in range(len(self.squares))))
        if len(self.gen_names) != len(self.squares):
            raise ValueError("one name per generator")
        if not self.latex_names:
            object.__setattr__(self, "latex_names",
                               tuple(_auto_latex(n) for n in self.gen_names))

    @property
    def m(self) -> int:
        return len(self.squares)

    @property
    def dim(self) -> int:
        return 1 << len(self.squares)


def _auto_latex(name: str) -> str:
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    return f"{head}_{{{tail}}}" if tail else head


@lru_cache(maxsize=None)
def g_nn(n: int) -> Signature:
    """Neutral algebra with generator order e1, f1, ..., en, fn."""
    if not 1 <= 2 * n <= MAX_GENERATORS:
        raise RangeError("g_nn supports 1 <= n <= 6")
    names = []
    for i in range(1, n + 1):
        names += [f"e{i}", f"f{i}"]
    return Signature((1, -1) * n, f"g{n}{n}", tuple(names))


@lru_cache(maxsize=None)
def g_1n(n: int) -> Signature:
    """Lorentz-style algebra with generator order e1, f1, ..., fn."""
    if not 1 <= n + 1 <= MAX_GENERATORS:
        raise RangeError("g_1n supports 1 <= n <= 11")
    names = ["e1"] + [f"f{i}" for i in range(1, n + 1)]
    return Signature((1,) + (-1,) * n, f"g1{n}", tuple(names))


@lru_cache(maxsize=None)
def g3() -> Signature:
    return Signature((1, 1, 1), "g3", ("e1", "e2", "e3"))


@lru_cache(maxsize=None)
def g13() -> Signature:
    return Signature((1, -1, -1, -1), "g13", ("g0", "g1", "g2", "g3"),
                     ("\\gamma_{0}", "\\gamma_{1}", "\\gamma_{2}", "\\gamma_{3}"))


@lru_cache(maxsize=None)
def _blade_product(mask_a: int, mask_b: int, squares: tuple[int, ...]) -> tuple[int, int]:
    # transposition count to interleave the two ascending factor lists
    s = 0
    a = mask_a >> 1
    while a:
        s += (a & mask_b).bit_count()
        a >>= 1
    sign = -1 if s & 1 else 1
    common = mask_a & mask_b
    i = 0
    while common:
        if common & 1 and squares[i] < 0:
            sign = -sign
        common >>= 1
        i += 1
    return sign, mask_a ^ mask_b


def blade_product(mask_a: int, mask_b: int, sig: Signature) -> tuple[int, int]:
    """Product of two basis blades: (sign, result mask)."""
    if mask_a >> sig.m or mask_b >> sig.m or mask_a < 0 or mask_b < 0:
        raise RangeError("blade mask out of range for signature")
    return _blade_product(mask_a, mask_b, sig.squares)


def _compat(x: "Multivector", y: "Multivector"):
    if x.sig.squares != y.sig.squares:
        raise SignatureMismatchError(
            f"signatures differ: {x.sig.squares} vs {y.sig.squares}")


class Multivector:
    """Immutable sparse multivector: blade mask -> exact scalar coefficient."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms: dict[int, Scalar] | None = None):
        self.sig = sig
        self.terms: dict[int, Scalar] = terms if terms else {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls(sig)

    @classmethod
    def scalar(cls, sig: Signature, value) -> "Multivector":
        s = Scalar.of(value) if not isinstance(value, Scalar) else value
        return cls(sig, {0: s} if s else {})

    @classmethod
    def blade(cls, sig: Signature, mask: int, coeff=1) -> "Multivector":
        if mask >> sig.m or mask < 0:
            raise RangeError("blade mask out of range for signature")
        s = Scalar.of(coeff) if not isinstance(coeff, Scalar) else coeff
        return cls(sig, {mask: s} if s else {})

    @classmethod
    def generator(cls, sig: Signature, i: int) -> "Multivector":
        if not 0 <= i < sig.m:
            raise RangeError("generator index out of range")
        return cls.blade(sig, 1 << i)

    # -- linear structure --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        _compat(self, other)
        merged = dict(self.terms)
        for m, c in other.terms.items():
            s = merged.get(m)
            if s is None:
                merged[m] = c
            else:
                s = s + c
                if s:
                    merged[m] = s
                else:
                    del merged[m]
        return Multivector(self.sig, merged)

    __radd__ = __add__

    def __neg__(self):
        return Multivector(self.sig, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor) -> "Multivector":
        s = factor if isinstance(factor, Scalar) else Scalar.of(factor)
        if not s:
            return Multivector(self.sig)
        out = {}
        for m, c in self.terms.items():
            v = c * s
            if v:
                out[m] = v
        return Multivector(self.sig, out)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return gp(self, other)
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other.inv())
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("multivector division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __xor__(self, other):
        if isinstance(other, Multivector):
            return wedge(self, other)
        return NotImplemented

    def _coerce(self, other):
        if isinstance(other, Multivector):
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return Multivector.scalar(self.sig, other)
        return None

    # -- structure queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def grades(self) -> set[int]:
        return {m.bit_count() for m in self.terms}

    def is_vector(self) -> bool:
        return all(m.bit_count() == 1 for m in self.terms)

    def is_scalar_elem(self) -> bool:
        return all(m == 0 for m in self.terms)

    def scalar_part(self) -> Scalar:
        return self.terms.get(0, Scalar())

    def coeff(self, mask: int) -> Scalar:
        return self.terms.get(mask, Scalar())

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.sig.squares == other.sig.squares and self.terms == other.terms

    def __hash__(self):
        return hash((self.sig.squares, frozenset((m, c) for m, c in self.terms.items())))

    # -- rendering and serialization ---------------------------------------

    def _blade_label(self, mask: int, names) -> str:
        return "*".join(names[i] for i in range(self.sig.m) if mask >> i & 1)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda k: (k.bit_count(), k)):
            c = self.terms[m]
            cs = str(c)
            if len(c.terms) > 1:
                cs = f"({cs})"
            label = self._blade_label(m, self.sig.gen_names)
            parts.append(cs if not label else (label if cs == "1" else
                         ("-" + label if cs == "-1" else f"{cs}*{label}")))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"Multivector<{self.sig.name or self.sig.squares}>({self})"

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda k: (k.bit_count(), k)):
            c = self.terms[m]
            cs = c.latex()
            if len(c.terms) > 1:
                cs = f"\\left({cs}\\right)"
            label = "".join(self.sig.latex_names[i]
                            for i in range(self.sig.m) if m >> i & 1)
            if not label:
                parts.append(cs)
            elif cs == "1":
                parts.append(label)
            elif cs == "-1":
                parts.append("-" + label)
            else:
                parts.append(f"{cs}\\," + label)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self) -> dict:
        terms = []
        for m in sorted(self.terms, key=lambda k: (k.bit_count(), k)):
            blade = [i for i in range(self.sig.m) if m >> i & 1]
            terms.append({"blade": blade, "coeff": self.terms[m].to_json()})
        return {"signature": list(self.sig.squares), "terms": terms}

    @classmethod
    def from_json(cls, data, sig: Signature | None = None) -> "Multivector":
        if not isinstance(data, dict) or "signature" not in data or "terms" not in data:
            raise ValueError("multivector JSON needs 'signature' and 'terms'")
        squares = tuple(data["signature"])
        if sig is None:
            sig = Signature(squares)
        elif sig.squares != squares:
            raise ValueError("multivector signature does not match target algebra")
        terms: dict[int, Scalar] = {}
        for t in data["terms"]:
            if not isinstance(t, dict) or "blade" not in t or "coeff" not in t:
                raise ValueError("term JSON needs 'blade' and 'coeff'")
            idx = t["blade"]
            if (not isinstance(idx, list) or idx != sorted(set(idx))
                    or any(not isinstance(i, int) or not 0 <= i < sig.m for i in idx)):
                raise ValueError("blade must list distinct ascending generator indices")
            mask = 0
            for i in idx:
                mask |= 1 << i
            c = Scalar.from_json(t["coeff"])
            if c:
                if mask in terms:
                    raise ValueError("duplicate blade in multivector JSON")
                terms[mask] = c
        return cls(sig, terms)


# -- products and involutions ---------------------------------------------


def gp(x: Multivector, y: Multivector) -> Multivector:
    """Geometric product."""
    _compat(x, y)
    squares = x.sig.squares
    acc: dict[int, Scalar] = {}
    for ma, ca in x.terms.items():
        for mb, cb in y.terms.items():
            sign, m = _blade_product(ma, mb, squares)
            c = ca * cb
            if sign < 0:
                c = -c
            s = acc.get(m)
            if s is None:
                acc[m] = c
            else:
                s = s + c
                if s:
                    acc[m] = s
                else:
                    del acc[m]
    return Multivector(x.sig, acc)


def wedge(x: Multivector, y: Multivector) -> Multivector:
    """Outer product: the grade-raising part of the geometric product."""
    _compat(x, y)
    squares = x.sig.squares
    acc: dict[int, Scalar] = {}
    for ma, ca in x.terms.items():
        for mb, cb in y.terms.items():
            if ma & mb:
                continue
            sign, m = _blade_product(ma, mb, squares)
            c = ca * cb
            if sign < 0:
                c = -c
            s = acc.get(m)
            if s is None:
                acc[m] = c
            else:
                s = s + c
                if s:
                    acc[m] = s
                else:
                    del acc[m]
    return Multivector(x.sig, acc)


def sym_dot(x: Multivector, y: Multivector) -> Multivector:
    """Symmetrized half product (x*y + y*x)/2 for grade-1 operands."""
    if not (x.is_vector() and y.is_vector()):
        raise NotAVectorError("sym_dot requires grade-1 operands")
    return (gp(x, y) + gp(y, x)).scale(Fraction(1, 2))


def reverse(x: Multivector) -> Multivector:
    """Reverse the factor order of every blade."""
    out = {}
    for m, c in x.terms.items():
        k = m.bit_count()
        out[m] = -c if k % 4 in (2, 3) else c
    return Multivector(x.sig, out)


def grade_project(x: Multivector, k: int) -> Multivector:
    if not 0 <= k <= x.sig.m:
        raise RangeError("grade out of range")
    return Multivector(x.sig, {m: c for m, c in x.terms.items() if m.bit_count() == k})


def gp_chain(vs) -> Multivector:
    """Left-to-right geometric product of a nonempty sequence."""
    vs = list(vs)
    out = vs[0]
    for v in vs[1:]:
        out = gp(out, v)
    return out


def wedge_chain(vs) -> Multivector:
    """Left-to-right outer product of a nonempty sequence."""
    vs = list(vs)
    out = vs[0]
    for v in vs[1:]:
        out = wedge(out, v)
    return out


def anticommutator(x: Multivector, y: Multivector) -> Multivector:
    return gp(x, y) + gp(y, x)
