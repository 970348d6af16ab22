"""Exact scalar arithmetic: rationals, complex rationals, and signs of
expressions mixing rationals with up to two square roots.

Every verdict in this library bottoms out in these primitives; nothing
here touches floating point.  Rational numbers are ``fractions.Fraction``
(always reduced, denominator positive).  Radical comparisons are decided
by repeated squaring with explicit sign guards, e.g.

    p >= sqrt(q)   iff   p >= 0  and  p^2 >= q        (q >= 0)

which stays exact on region boundaries where floating point fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints and 'p/q' strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def rational_str(x: Fraction) -> str:
    """Serialize a rational as 'p/q' (bare 'p' when q = 1)."""
    return str(x)


@dataclass(frozen=True)
class ComplexRational:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re))
        object.__setattr__(self, "im", as_rational(self.im))

    @staticmethod
    def of(x) -> "ComplexRational":
        if isinstance(x, ComplexRational):
            return x
        if isinstance(x, (Fraction, int)):
            return ComplexRational(as_rational(x))
        if isinstance(x, str):
            return ComplexRational(as_rational(x))
        if isinstance(x, tuple) and len(x) == 2:
            return ComplexRational(as_rational(x[0]), as_rational(x[1]))
        raise TypeError(f"cannot interpret {x!r} as a complex rational")

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conj(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def __add__(self, other) -> "ComplexRational":
        o = ComplexRational.of(other)
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "ComplexRational":
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other) -> "ComplexRational":
        return self + (-ComplexRational.of(other))

    def __rsub__(self, other) -> "ComplexRational":
        return ComplexRational.of(other) + (-self)

    def __mul__(self, other) -> "ComplexRational":
        o = ComplexRational.of(other)
        return ComplexRational(self.re * o.re - self.im * o.im,
                               self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ComplexRational":
        o = ComplexRational.of(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("complex rational division by zero")
        return ComplexRational((self.re * o.re + self.im * o.im) / d,
                               (self.im * o.re - self.re * o.im) / d)

    def __eq__(self, other) -> bool:
        try:
            o = ComplexRational.of(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"CQ({self.re})"
        return f"CQ({self.re}, {self.im}i)"

    def to_json(self):
        if self.im == 0:
            return rational_str(self.re)
        return {"re": rational_str(self.re), "im": rational_str(self.im)}

    @staticmethod
    def from_json(obj) -> "ComplexRational":
        if isinstance(obj, str):
            return ComplexRational(as_rational(obj))
        if isinstance(obj, dict):
            return ComplexRational(as_rational(obj.get("re", "0")),
                                   as_rational(obj.get("im", "0")))
        if isinstance(obj, int):
            return ComplexRational(Fraction(obj))
        raise ValueError(f"bad complex rational JSON: {obj!r}")


CQ = ComplexRational


def modulus_squared(z: ComplexRational) -> Fraction:
    """|z|^2 = re^2 + im^2, exact."""
    z = ComplexRational.of(z)
    return z.re * z.re + z.im * z.im


@dataclass(frozen=True)
class RadicalExpr:
    """base + sum of coeff*sqrt(radicand), radicands rational >= 0.

    At most two radical terms; that is all the closed-form family
    conditions ever need, and it keeps sign decisions elementary.
    """

    base: Fraction
    radical_terms: Tuple[Tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "base", as_rational(self.base))
        terms = []
        for coeff, radicand in self.radical_terms:
            coeff, radicand = as_rational(coeff), as_rational(radicand)
            if radicand < 0:
                raise ValueError("negative radicand")
            if coeff != 0 and radicand != 0:
                terms.append((coeff, radicand))
        if len(terms) > 2:
            raise ValueError("at most two radical terms are supported")
        object.__setattr__(self, "radical_terms", tuple(terms))

    def __float__(self):
        import math
        v = float(self.base)
        for coeff, radicand in self.radical_terms:
            v += float(coeff) * math.sqrt(float(radicand))
        return v


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_single_radical(p: Fraction, c: Fraction, r: Fraction) -> int:
    """Exact sign of p + c*sqrt(r) with r >= 0."""
    if c == 0 or r == 0:
        return _sign(p)
    if p == 0:
        return _sign(c)
    if p > 0 and c > 0:
        return 1
    if p < 0 and c < 0:
        return -1
    # opposite signs: compare p^2 against c^2 r on the dominant side
    lhs, rhs = p * p, c * c * r
    if lhs == rhs:
        return 0
    if p > 0:          # c < 0: positive iff p^2 > c^2 r
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1


def sign_of_radical_expr(e: RadicalExpr) -> int:
    """Exact sign in {-1, 0, +1} of base + sum coeff*sqrt(radicand).

    Decided by isolating one radical at a time and squaring under sign
    guards; no floating point is involved.
    """
    terms = e.radical_terms
    if not terms:
        return _sign(e.base)
    if len(terms) == 1:
        (c1, r1), = terms
        return _sign_single_radical(e.base, c1, r1)
    (c1, r1), (c2, r2) = terms
    # E = L + c2*sqrt(r2) with L = base + c1*sqrt(r1)
    sL = _sign_single_radical(e.base, c1, r1)
    sR = _sign(c2)     # sign of c2*sqrt(r2), r2 > 0 here
    if sL == 0:
        return sR
    if sL == sR:
        return sL
    # opposite strict signs: compare L^2 vs c2^2 r2.
    # L^2 = base^2 + c1^2 r1 + 2 base c1 sqrt(r1): one radical again.
    d = _sign_single_radical(e.base * e.base + c1 * c1 * r1 - c2 * c2 * r2,
                             2 * e.base * c1, r1)
    if d == 0:
        return 0
    return sL if d > 0 else sR


def radical_nonneg(base: RationalLike,
                   terms: Sequence[Tuple[RationalLike, RationalLike]] = ()) -> bool:
    """Convenience: base + sum coeff*sqrt(radicand) >= 0, exactly."""
    expr = RadicalExpr(as_rational(base),
                       tuple((as_rational(c), as_rational(r)) for c, r in terms))
    return sign_of_radical_expr(expr) >= 0


def simplest_rational_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator (then numerator) in [lo, hi]
    (Stern-Brocot descent)."""
    import math
    if hi < lo:
        raise ValueError("need lo <= hi")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational_between(-hi, -lo)
    # 0 < lo <= hi
    fl = math.floor(lo)
    if fl + 1 <= hi:
        return Fraction(fl if fl >= lo else fl + 1)
    if lo == fl:
        return Fraction(fl)
    frac = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / frac
