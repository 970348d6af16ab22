"""The three-parameter operator family

    F(a,b,c) = [[1/2, a,   0,   0  ],
                [a*,  1/2, b,   0  ],
                [0,   b*,  1/2, c  ],
                [0,   0,   c*,  1/2]]

on C^2 (x) C^2, its real symmetrization F'(a,b,c), the four-parameter
relative E(s,p,q,r), and exact closed-form block-positivity and
positivity tests, plus parameter-region scanning.

Writing alpha = a + c, gamma = a - c, P = |alpha|^2, G = |gamma|^2,
R = Re(alpha conj(gamma)) = |a|^2 - |c|^2 and B = |b|, block positivity
is equivalent to

    1 - |alpha + gamma cos(phi)| - B sin(phi) >= 0   for all phi,

which this module decides exactly: the general case reduces to a quartic
in t = cos(phi) that must be nonnegative on [-1, 1], and the special
cases |a| = |c| and a = r c (r real) have radical-free closed forms.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from .exact import (CQ, ComplexRational, RadicalExpr, as_rational,
                    modulus_squared, rational_str, sign_of_radical_expr)
from .operators import BipartiteOperator
from .polynomials import UniPoly, poly_nonneg_on_interval

ParamLike = Union[ComplexRational, Fraction, int, str]


@dataclass(frozen=True)
class FamilyParams:
    a: ComplexRational
    b: ComplexRational
    c: ComplexRational

    def __post_init__(self):
        object.__setattr__(self, "a", ComplexRational.of(self.a))
        object.__setattr__(self, "b", ComplexRational.of(self.b))
        object.__setattr__(self, "c", ComplexRational.of(self.c))

    @staticmethod
    def of(a: ParamLike, b: ParamLike, c: ParamLike) -> "FamilyParams":
        return FamilyParams(parse_complex_rational(a), parse_complex_rational(b),
                            parse_complex_rational(c))

    @property
    def is_real(self) -> bool:
        return self.a.is_real and self.b.is_real and self.c.is_real


_NUM = r"\d+(?:/\d+)?"
_PURE_IM_RE = re.compile(rf"^(?P<sign>[+-]?)(?P<mag>{_NUM})?[ij]$")
_RE_PLUS_IM_RE = re.compile(
    rf"^(?P<re>[+-]?{_NUM})(?P<sign>[+-])(?P<mag>{_NUM})?[ij]$")


def _signed(sign: str, mag: Optional[str]) -> Fraction:
    v = Fraction(mag) if mag else Fraction(1)
    return -v if sign == "-" else v


def parse_complex_rational(s: ParamLike) -> ComplexRational:
    """Parse 'p/q', 'p/q+r/si', 'i', '3i', '-2/3j' style strings (and
    pass through anything ComplexRational.of already accepts)."""
    if not isinstance(s, str):
        return ComplexRational.of(s)
    txt = s.strip().replace(" ", "")
    m = _PURE_IM_RE.match(txt)
    if m:
        return ComplexRational(Fraction(0), _signed(m.group("sign"), m.group("mag")))
    m = _RE_PLUS_IM_RE.match(txt)
    if m:
        return ComplexRational(Fraction(m.group("re")),
                               _signed(m.group("sign"), m.group("mag")))
    try:
        return ComplexRational(Fraction(txt))
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"cannot parse complex rational {s!r}") from e


# ---------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------

def family_f(params: FamilyParams) -> BipartiteOperator:
    a, b, c = params.a, params.b, params.c
    h = CQ(Fraction(1, 2))
    z = CQ(0)
    rows = [[h, a, z, z],
            [a.conj(), h, b, z],
            [z, b.conj(), h, c],
            [z, z, c.conj(), h]]
    return BipartiteOperator(2, 2, rows)


def family_e(s, p, q, r) -> BipartiteOperator:
    s, p, q, r = (as_rational(x) for x in (s, p, q, r))
    h = Fraction(1, 2)
    rows = [[h, s, 0, r],
            [s, h, p, 0],
            [0, p, h, q],
            [r, 0, q, h]]
    return BipartiteOperator(2, 2, rows)


def family_f_prime(a, b, c) -> BipartiteOperator:
    """F'(a,b,c) = (F + F^tau)/2 = E(a, b/2, c, b/2), real parameters."""
    a, b, c = (as_rational(x) for x in (a, b, c))
    return family_e(a, b / 2, c, b / 2)


# ---------------------------------------------------------------------
# Derived scalars
# ---------------------------------------------------------------------

def _pgrb(params: FamilyParams) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    alpha = params.a + params.c
    gamma = params.a - params.c
    p = modulus_squared(alpha)
    g = modulus_squared(gamma)
    r = modulus_squared(params.a) - modulus_squared(params.c)   # Re(alpha conj gamma)
    b2 = modulus_squared(params.b)
    return p, g, r, b2


def is_case_a(params: FamilyParams) -> bool:
    """|a| = |c|, i.e. Re(alpha conj gamma) = 0."""
    return modulus_squared(params.a) == modulus_squared(params.c)


def is_case_b(params: FamilyParams) -> bool:
    """a = r c with r real (or c = 0), i.e. Im(c conj(a)) = 0."""
    a, c = params.a, params.c
    return (c * a.conj()).im == 0


# ---------------------------------------------------------------------
# Closed-form deciders
# ---------------------------------------------------------------------

def bp_family_case_a(params: FamilyParams) -> bool:
    """Block positivity for |a| = |c|.

    The constraint is max over s in [0,1] of sqrt(P + G(1-s^2)) + B s
    <= 1; the max sits at s = 1 when B sqrt(P) >= G and at the interior
    critical point otherwise, where its square is (P+G)(G+B^2)/G.
    """
    if not is_case_a(params):
        raise ValueError("case a requires |a| = |c|")
    p, g, _, b2 = _pgrb(params)
    if b2 == 0:
        return p + g <= 1
    if b2 * p >= g * g:
        expr = RadicalExpr(Fraction(1), ((Fraction(-1), p), (Fraction(-1), b2)))
        return sign_of_radical_expr(expr) >= 0
    return (p + g) * (g + b2) <= g


def bp_family_case_b(params: FamilyParams) -> bool:
    """Block positivity for a = r c (r real):
    1 - |alpha| - sqrt(|gamma|^2 + |b|^2) >= 0, decided radical-free."""
    if not is_case_b(params):
        raise ValueError("case b requires a = r*c with real r")
    p, g, _, b2 = _pgrb(params)
    expr = RadicalExpr(Fraction(1), ((Fraction(-1), p), (Fraction(-1), g + b2)))
    return sign_of_radical_expr(expr) >= 0


def _bp_general_quartic(params: FamilyParams) -> bool:
    """The fully general exact decision, no case preconditions.

    With t = cos(phi), block positivity is |b| <= 1, |alpha +- gamma| <= 1,
    and Q(t)^2 - 4 B^2 (1 - t^2) >= 0 on [-1, 1] for
    Q(t) = 1 + B^2 - P - 2 R t - (G + B^2) t^2.
    """
    p, g, r, b2 = _pgrb(params)
    if b2 > 1:
        return False
    if p + g + 2 * abs(r) > 1:
        return False
    k = 1 + b2 - p
    m = g + b2
    q = UniPoly([k, -2 * r, -m])
    quart = q * q - UniPoly([4 * b2, 0, -4 * b2])
    return poly_nonneg_on_interval(quart, Fraction(-1), Fraction(1))


def bp_family_general(params: FamilyParams) -> bool:
    """Exact block positivity of F(a,b,c), any complex parameters.

    Parameters with a = r c (real ratio; includes all real triples) take
    the case-b closed form, everything else the quartic route; the two
    agree where both apply.
    """
    if is_case_b(params):
        return bp_family_case_b(params)
    return _bp_general_quartic(params)


def psd_family(params: FamilyParams) -> bool:
    """Positive semidefiniteness of F(a,b,c):
    1/16 - (|a|^2+|b|^2+|c|^2)/4 + |a|^2|c|^2 >= 0 and
    1/2 - (|a|^2+|b|^2+|c|^2) >= 0."""
    a2 = modulus_squared(params.a)
    b2 = modulus_squared(params.b)
    c2 = modulus_squared(params.c)
    s = a2 + b2 + c2
    return (Fraction(1, 16) - s / 4 + a2 * c2 >= 0) and (Fraction(1, 2) - s >= 0)


def bp_family_real(params: FamilyParams) -> bool:
    """Block positivity (over R, equivalently over C) for real a, b, c."""
    if not params.is_real:
        raise ValueError("bp_family_real requires real parameters")
    return bp_family_case_b(params)


# ---------------------------------------------------------------------
# Region scanning
# ---------------------------------------------------------------------

AxisSpec = Union[Fraction, Tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class GridSpec:
    """Axis = fixed rational value (a slice) or an inclusive (lo, hi)
    range stepped by `step`."""

    a: AxisSpec
    b: AxisSpec
    c: AxisSpec
    step: Fraction

    def axis_values(self, spec: AxisSpec) -> List[Fraction]:
        if isinstance(spec, tuple):
            lo, hi = as_rational(spec[0]), as_rational(spec[1])
            if hi < lo:
                raise ValueError("empty axis range")
            step = as_rational(self.step)
            if step <= 0:
                raise ValueError("step must be positive")
            vals = []
            v = lo
            while v <= hi:
                vals.append(v)
                v += step
            return vals
        return [as_rational(spec)]


@dataclass(frozen=True)
class RegionPoint:
    params: FamilyParams
    psd: bool
    block_positive: bool


def _scan_point(abc: Tuple[Fraction, Fraction, Fraction]) -> RegionPoint:
    params = FamilyParams(CQ(abc[0]), CQ(abc[1]), CQ(abc[2]))
    return RegionPoint(params, psd_family(params), bp_family_general(params))


def region_scan(spec: GridSpec, threads: Optional[int] = None) -> List[RegionPoint]:
    """Evaluate psd and block positivity on the grid, a-major order.

    BLOCKPOS_THREADS (or `threads`) caps worker processes; output order
    is deterministic regardless.
    """
    avals = spec.axis_values(spec.a)
    bvals = spec.axis_values(spec.b)
    cvals = spec.axis_values(spec.c)
    pts = [(a, b, c) for a in avals for b in bvals for c in cvals]
    if not pts:
        raise ValueError("empty grid")
    if threads is None:
        threads = int(os.environ.get("BLOCKPOS_THREADS", "1") or "1")
    if threads > 1 and len(pts) > 1000:
        import multiprocessing
        with multiprocessing.Pool(threads) as pool:
            return pool.map(_scan_point, pts, chunksize=2048)
    return [_scan_point(p) for p in pts]


def region_scan_csv(points: Iterable[RegionPoint]) -> str:
    """CSV with exact rational coordinates; booleans as 0/1."""
    lines = ["a,b,c,psd,block_positive"]
    for pt in points:
        lines.append(",".join([
            rational_str(pt.params.a.re), rational_str(pt.params.b.re),
            rational_str(pt.params.c.re),
            "1" if pt.psd else "0", "1" if pt.block_positive else "0",
        ]))
    return "\n".join(lines) + "\n"
