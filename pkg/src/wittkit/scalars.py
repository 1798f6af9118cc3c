"""Exact scalar ring: rational combinations of square roots with a commuting imaginary j.

An element is a finite sum over squarefree positive radicands d:

    sum_d (p_d + q_d * j) * sqrt(d)

with p_d, q_d rational and j**2 = -1.  The d = 1 slot carries the plain
rational and pure-imaginary parts.  Addition and multiplication are closed
(sqrt(d1)*sqrt(d2) reduces through the shared square factor); inversion is
defined only for monomials, which is all the constructions here divide by.
Negative radicands enter through j: sqrt(-d) is represented as j*sqrt(d).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NonMonomialError

# term key: (squarefree radicand d, imaginary part?)
Key = tuple[int, bool]


def split_square(n: int) -> tuple[int, int]:
    """Split n > 0 as outside**2 * inside with inside squarefree."""
    if n <= 0:
        raise ValueError("split_square needs n > 0")
    outside = 1
    inside = 1
    p = 2
    while p * p <= n:
        if n % p:
            p += 1 if p == 2 else 2
            continue
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        outside *= p ** (e // 2)
        if e & 1:
            inside *= p
    inside *= n  # leftover factor is 1 or prime
    return outside, inside


def is_squarefree(n: int) -> bool:
    return n > 0 and split_square(n)[1] == n


class Scalar:
    """Immutable ring element; the empty term map is the canonical zero."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Key, Fraction] | None = None):
        # terms must already be normalized: squarefree d > 0, no zero values
        self.terms: dict[Key, Fraction] = terms if terms else {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def of(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        q = Fraction(value)
        return cls({(1, False): q}) if q else cls()

    @classmethod
    def rational(cls, p, q=1) -> "Scalar":
        return cls.of(Fraction(p, q))

    @classmethod
    def j(cls, coeff=1) -> "Scalar":
        q = Fraction(coeff)
        return cls({(1, True): q}) if q else cls()

    @classmethod
    def sqrt(cls, n: int, coeff=1) -> "Scalar":
        """coeff * sqrt(n); sqrt of a negative integer comes out as j*sqrt(-n)."""
        if n == 0:
            raise ValueError("sqrt(0) has no radicand")
        q = Fraction(coeff)
        if not q:
            return cls()
        imag = n < 0
        outside, inside = split_square(-n if imag else n)
        return cls({(inside, imag): q * outside})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        merged = dict(self.terms)
        for k, v in other.terms.items():
            s = merged.get(k)
            if s is None:
                merged[k] = v
            else:
                s = s + v
                if s:
                    merged[k] = s
                else:
                    del merged[k]
        return Scalar(merged)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[Key, Fraction] = {}
        for (d1, i1), q1 in self.terms.items():
            for (d2, i2), q2 in other.terms.items():
                g = gcd(d1, d2)
                d = (d1 // g) * (d2 // g)
                q = q1 * q2 * g
                if i1 and i2:
                    q = -q
                key = (d, i1 ^ i2)
                s = acc.get(key)
                if s is None:
                    acc[key] = q
                else:
                    s = s + q
                    if s:
                        acc[key] = s
                    else:
                        del acc[key]
        return Scalar(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return self * other.inv()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("scalar division by zero")
        return self * Scalar.of(Fraction(1) / Fraction(other))

    def inv(self) -> "Scalar":
        """Multiplicative inverse of a monomial q*sqrt(d) or q*j*sqrt(d)."""
        if not self.terms:
            raise ZeroDivisionError("zero scalar has no inverse")
        if len(self.terms) > 1:
            raise NonMonomialError("inverse defined only for single-term scalars")
        ((d, imag), q), = self.terms.items()
        r = Fraction(1) / (q * d)
        if imag:
            r = -r
        return Scalar({(d, imag): r})

    def conjugate(self) -> "Scalar":
        """Negate the j part of every term."""
        return Scalar({(d, imag): (-q if imag else q) for (d, imag), q in self.terms.items()})

    # -- predicates and accessors ------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_rational(self) -> bool:
        return all(k == (1, False) for k in self.terms)

    def is_complex_rational(self) -> bool:
        """True when no genuine radical appears (every term has d = 1)."""
        return all(d == 1 for d, _ in self.terms)

    def as_fraction(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError("scalar is not a plain rational")
        return self.terms[(1, False)]

    def complex_parts(self) -> tuple[Fraction, Fraction]:
        """(real, imaginary) rational parts; requires d = 1 terms only."""
        if not self.is_complex_rational():
            raise ValueError("scalar has radical terms")
        return self.terms.get((1, False), Fraction(0)), self.terms.get((1, True), Fraction(0))

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- rendering and serialization ---------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (d, imag), q in self._sorted_terms():
            body = []
            if imag:
                body.append("j")
            if d != 1:
                body.append(f"sqrt({d})")
            if body:
                mag = "*".join(body)
                if q == 1:
                    s = mag
                elif q == -1:
                    s = "-" + mag
                else:
                    s = f"{q}*{mag}"
            else:
                s = str(q)
            parts.append(s)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"Scalar({self})"

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (d, imag), q in self._sorted_terms():
            mag = ("j" if imag else "") + (f"\\sqrt{{{d}}}" if d != 1 else "")
            neg = q < 0
            aq = -q if neg else q
            if aq == 1 and mag:
                body = mag
            elif aq.denominator == 1:
                body = f"{aq}{mag}"
            else:
                body = f"\\frac{{{aq.numerator}}}{{{aq.denominator}}}{mag}"
            parts.append(("-" if neg else "") + body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self) -> list[dict]:
        groups: dict[int, dict] = {}
        for (d, imag), q in self._sorted_terms():
            entry = groups.setdefault(d, {"d": d})
            entry["im" if imag else "re"] = str(q)
        return [groups[d] for d in sorted(groups)]

    @classmethod
    def from_json(cls, data) -> "Scalar":
        if not isinstance(data, list):
            raise ValueError("scalar JSON must be a list of term objects")
        terms: dict[Key, Fraction] = {}
        for entry in data:
            if not isinstance(entry, dict) or "d" not in entry:
                raise ValueError("scalar term must be an object with a 'd' key")
            d = entry["d"]
            if not isinstance(d, int) or not is_squarefree(d):
                raise ValueError(f"radicand {d!r} is not a squarefree positive integer")
            for part, imag in (("re", False), ("im", True)):
                if part in entry:
                    q = Fraction(entry[part])
                    if q:
                        key = (d, imag)
                        if key in terms:
                            raise ValueError(f"duplicate term for d={d}")
                        terms[key] = q
        return cls(terms)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.of(x)
    return None


ZERO = Scalar()
ONE = Scalar.of(1)
J = Scalar.j()


# free-function aliases for call sites that avoid methods

def scalar_add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def scalar_inv(x: Scalar) -> Scalar:
    return x.inv()
