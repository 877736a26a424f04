"""Exact rational polynomials and distinct real-root counting.

Rationals are :class:`fractions.Fraction`, which already keeps a positive
denominator and lowest terms, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Union

from .errors import ParseError, ZeroPolynomial

RationalLike = Union[Fraction, int, str]


def rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise ParseError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Poly:
    """Immutable polynomial with rational coefficients, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike], lead: RationalLike = 1) -> "Poly":
        p = cls((lead,))
        for r in roots:
            p = p * cls((-rational(r), 1))
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[format_rational(c) for c in self.coeffs]})"

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: Union["Poly", RationalLike]) -> "Poly":
        if not isinstance(other, Poly):
            q = rational(other)
            return Poly(c * q for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.lead
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = rem[shift + dd] / lead
            quot[shift] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] -= c * b
        return Poly(quot), Poly(rem[:dd])

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)


def poly_eval(p: Poly, x: RationalLike) -> Fraction:
    return p(x)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return p - q


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def square_free(p: Poly) -> Poly:
    """``p / gcd(p, p')``: same distinct roots, each simple."""
    if p.degree <= 1:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p
    return p // g



# Integer fast path. Scaling a Sturm sequence member by a positive constant
# leaves every sign unchanged, so the sequence can be kept primitive.

def _int_coeffs(p: Poly) -> list[int]:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    out = [int(c * den) for c in p.coeffs]
    return _primitive(out)


def _primitive(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = gcd(g, c)
    if g > 1:
        a = [c // g for c in a]
    return a


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _neg_rem(a: list[int], b: list[int]) -> list[int]:
    """A positive multiple of -(a mod b), made primitive."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        # a <- |lb| a - sign(lb) la x^shift b keeps a positive multiplier
        s = 1 if lb > 0 else -1
        a = [abs(lb) * c for c in a]
        for j, c in enumerate(b):
            a[shift + j] -= s * la * c
        a.pop()
        _trim(a)
    return _primitive([-c for c in a])


def _int_derivative(a: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(a) if i]


def _int_sign_at(a: list[int], num: int, den: int) -> int:
    # den > 0, so this is the sign of den^d * a(num/den), by homogenised Horner
    d = len(a) - 1
    acc = a[d]
    pw = 1
    for i in range(d - 1, -1, -1):
        pw *= den
        acc = acc * num + a[i] * pw
    return (acc > 0) - (acc < 0)


def _int_sturm(a: list[int]) -> list[list[int]]:
    seq = [a, _primitive(_int_derivative(a))]
    while True:
        r = _neg_rem(seq[-2], seq[-1])
        if not r:
            return seq
        seq.append(r)


def _int_variations(seq, x: Fraction) -> int:
    changes = 0
    last = 0
    for q in seq:
        s = _int_sign_at(q, x.numerator, x.denominator)
        if s:
            if last and s != last:
                changes += 1
            last = s
    return changes


def count_roots_open(p: Poly, lo: RationalLike, hi: RationalLike) -> int:
    """Number of distinct real roots of ``p`` strictly between ``lo`` and ``hi``.

    Sturm's theorem on the square-free part counts the roots in ``(lo, hi]``;
    a root sitting exactly at ``hi`` is then subtracted.
    """
    if p.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial is undefined")
    lo, hi = rational(lo), rational(hi)
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    if p.degree == 0:
        return 0
    if p.degree == 1:
        root = -p.coeffs[0] / p.coeffs[1]
        return int(lo < root < hi)
    seq = _int_sturm(_int_coeffs(p))
    if len(seq[-1]) > 1:
        # repeated roots: the last member is (a multiple of) gcd(p, p')
        seq = _int_sturm(_int_coeffs(square_free(p)))
    q = seq[0]
    count = _int_variations(seq, lo) - _int_variations(seq, hi)
    if _int_sign_at(q, hi.numerator, hi.denominator) == 0:
        count -= 1
    return count
