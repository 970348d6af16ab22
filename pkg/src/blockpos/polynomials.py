"""Univariate polynomials over the rationals: Sturm sequences, real root
counting and isolation, and exact nonnegativity tests.

The degree-4 closed form follows the sign cascade

    c4 > 0  and  (sigma1 >= 0 or sigma2 >= 0)  and  sigma3 "just below" 0

where sigma1, sigma2, sigma3 carry the signs of the leading coefficients
of the generic quartic's Sturm chain members and the "just below" test
perturbs the constant term upward infinitesimally.  sigma3 equals minus
the discriminant; its disposition at sigma3 = 0 is read off the Taylor
expansion of sigma3 in the constant term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .exact import as_rational, rational_str

NEG_INF = float("-inf")
POS_INF = float("inf")


class UniPoly:
    """Immutable dense univariate polynomial, coefficients Fraction,
    index = power (constant term first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero:
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "UniPoly(" + " + ".join(terms) + ")"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                        for i in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    def scale(self, k) -> "UniPoly":
        k = as_rational(k)
        return UniPoly([c * k for c in self.coeffs])

    def __pow__(self, n: int) -> "UniPoly":
        out = UniPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        d = other.coeffs
        for k in range(dq, -1, -1):
            q = rem[k + len(d) - 1] / d[-1]
            quo[k] = q
            if q:
                for j, c in enumerate(d):
                    rem[k + j] -= q * c
        return UniPoly(quo), UniPoly(rem[:len(d) - 1])

    def rem(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self.scale(1 / self.lead)

    def compose_shift(self, t) -> "UniPoly":
        """p(x + t)."""
        t = as_rational(t)
        out = UniPoly()
        xpt = UniPoly([t, 1])
        for c in reversed(self.coeffs):
            out = out * xpt + UniPoly([c])
        return out

    # -- serialization ------------------------------------------------

    def to_json(self) -> List[str]:
        return [rational_str(c) for c in self.coeffs]

    @staticmethod
    def from_json(obj: Sequence) -> "UniPoly":
        return UniPoly([as_rational(c) for c in obj])


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over the rationals (Euclid, monic reduction each step)."""
    a, b = f, g
    while not b.is_zero:
        r = a.rem(b)
        a, b = b, (r.monic() if not r.is_zero else r)
    return a.monic() if not a.is_zero else a


def squarefree_part(f: UniPoly) -> UniPoly:
    """f / gcd(f, f'), scaled so the leading coefficient is +-1 with the
    sign of f's leading coefficient."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return UniPoly([1 if f.lead > 0 else -1])
    g = poly_gcd(f, f.derivative())
    p = f.exact_div(g)
    s = 1 if p.lead > 0 else -1
    return p.scale(Fraction(s) / p.lead)


def squarefree_decomposition(f: UniPoly) -> List[Tuple[UniPoly, int]]:
    """Yun's algorithm: nonconstant monic pairwise-coprime factors with
    their multiplicities, f = lead * prod a_i^i."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return []
    f = f.monic()
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return [(f, 1)]
    w = f.exact_div(g)
    y = f.derivative().exact_div(g)
    out: List[Tuple[UniPoly, int]] = []
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        a = poly_gcd(w, z)
        if a.degree > 0:
            out.append((a, i))
        w = w.exact_div(a)
        y = z.exact_div(a)
        i += 1
    return out


# ---------------------------------------------------------------------
# Sturm machinery
# ---------------------------------------------------------------------

def sturm_sequence(f: UniPoly) -> List[UniPoly]:
    """f0 = f, f1 = f', f_{n+1} = rem(f_{n-1}, f_n), stopping at the last
    nonzero member (the gcd of f and f').

    Remainders are kept unflipped; the alternating sign pattern
    (+, +, -, -, +, +, ...) is applied by the counting routine.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    seq = [f]
    d = f.derivative()
    if d.is_zero:
        return seq
    seq.append(d)
    while True:
        r = seq[-2].rem(seq[-1])
        if r.is_zero:
            return seq
        seq.append(r)
        if r.degree == 0:
            return seq


def _pattern_sign(n: int) -> int:
    return 1 if n % 4 < 2 else -1


def _count_changes(signs: Iterable[int]) -> int:
    changes = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def _sign_of(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sturm_changes_at(seq: Sequence[UniPoly], x) -> int:
    if x == NEG_INF:
        signs = [_pattern_sign(n) * _sign_of(p.lead) * (-1) ** p.degree
                 for n, p in enumerate(seq)]
    elif x == POS_INF:
        signs = [_pattern_sign(n) * _sign_of(p.lead) for n, p in enumerate(seq)]
    else:
        signs = [_pattern_sign(n) * _sign_of(p(x)) for n, p in enumerate(seq)]
    return _count_changes(signs)


def count_real_roots_in(f: UniPoly, lo=None, hi=None,
                        _chain: Optional[Sequence[UniPoly]] = None) -> int:
    """Number of distinct real roots of squarefree f in (lo, hi);
    lo=None means -infinity, hi=None means +infinity.

    Rejects non-squarefree input and finite endpoints that are roots.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    lo = NEG_INF if lo is None else lo
    hi = POS_INF if hi is None else hi
    if _chain is None:
        if poly_gcd(f, f.derivative()).degree > 0 and f.degree > 0:
            raise ValueError("polynomial is not squarefree")
        _chain = sturm_sequence(f)
    for e in (lo, hi):
        if e not in (NEG_INF, POS_INF) and f(e) == 0:
            raise ValueError("interval endpoint is a root")
    if not (lo == NEG_INF or hi == POS_INF or as_rational(lo) < as_rational(hi)):
        raise ValueError("empty interval")
    return _sturm_changes_at(_chain, lo) - _sturm_changes_at(_chain, hi)


def cauchy_root_bound(f: UniPoly) -> Fraction:
    """B = 1 + max |c_i / c_lead|; all real roots lie strictly inside (-B, B)."""
    if f.is_zero or f.degree == 0:
        return Fraction(1)
    m = max(abs(c) for c in f.coeffs[:-1])
    return 1 + m / abs(f.lead)


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint open rational intervals, one distinct real root each,
    tagged with the root's multiplicity in the original polynomial."""

    intervals: Tuple[Tuple[Fraction, Fraction, int], ...]

    @property
    def distinct_count(self) -> int:
        return len(self.intervals)

    @property
    def count_with_multiplicity(self) -> int:
        return sum(m for _, _, m in self.intervals)


def _nonroot_split(f: UniPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """A point in (lo, hi) that is not a root of f (f has finitely many
    roots, so the probe sequence terminates)."""
    mid = (lo + hi) / 2
    if f(mid) != 0:
        return mid
    k = 3
    while True:
        cand = lo + (hi - lo) / k
        if f(cand) != 0:
            return cand
        k += 2


def _isolate_squarefree(sf: UniPoly,
                        chain: Sequence[UniPoly]) -> List[Tuple[Fraction, Fraction]]:
    if sf.degree <= 0:
        return []
    bound = cauchy_root_bound(sf)
    out: List[Tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count_real_roots_in(sf, lo, hi, _chain=chain)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = _nonroot_split(sf, lo, hi)
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort(key=lambda iv: iv[0])
    return out


def isolate_real_roots(f: UniPoly) -> RootIsolation:
    """Isolating intervals for all distinct real roots, with multiplicities
    taken from the squarefree decomposition."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return RootIsolation(())
    factors = squarefree_decomposition(f)
    sf = UniPoly([1])
    for p, _ in factors:
        sf = sf * p
    chain = sturm_sequence(sf) if sf.degree > 0 else [sf]
    intervals = _isolate_squarefree(sf, chain)
    chains = {m: sturm_sequence(p) for p, m in factors}
    polys = {m: p for p, m in factors}
    tagged = []
    for lo, hi in intervals:
        mult = None
        for m, p in polys.items():
            if p.degree > 0 and count_real_roots_in(p, lo, hi, _chain=chains[m]) == 1:
                mult = m
                break
        assert mult is not None, "isolated root missing from every factor"
        tagged.append((lo, hi, mult))
    return RootIsolation(tuple(tagged))


def refine_isolating_interval(f: UniPoly, lo: Fraction, hi: Fraction,
                              width: Fraction) -> Tuple[Fraction, Fraction]:
    """Shrink an isolating interval of squarefree f below the given width
    by sign-preserving bisection."""
    slo = _sign_of(f(lo))
    shi = _sign_of(f(hi))
    if slo == 0 or shi == 0:
        raise ValueError("endpoints must not be roots")
    while hi - lo > width:
        mid = _nonroot_split(f, lo, hi)
        if _sign_of(f(mid)) == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


# ---------------------------------------------------------------------
# Nonnegativity
# ---------------------------------------------------------------------

def poly_nonneg_on_reals(f: UniPoly) -> bool:
    """f >= 0 everywhere, any degree: positive leading coefficient, even
    degree, and no real root of odd multiplicity."""
    if f.is_zero:
        return True
    if f.degree == 0:
        return f.lead >= 0
    if f.lead < 0 or f.degree % 2 == 1:
        return False
    for p, mult in squarefree_decomposition(f):
        if mult % 2 == 1 and count_real_roots_in(p) > 0:
            return False
    return True


def poly_nonneg_on_interval(f: UniPoly, lo, hi) -> bool:
    """f >= 0 on the closed interval [lo, hi] (endpoint zeros allowed).

    Decided exactly through the substitution x(u) = (lo + hi u^2)/(1 + u^2),
    which maps R onto [lo, hi): F(u) = f(x(u)) (1 + u^2)^deg is a
    polynomial, globally nonnegative iff f >= 0 on [lo, hi] (the missing
    endpoint is the leading-coefficient limit, checked up front).
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if f.is_zero:
        return True
    if f(hi) < 0 or f(lo) < 0:
        return False
    d = f.degree
    den = UniPoly([1, 0, 1])                    # 1 + u^2
    num = UniPoly([lo, 0, hi])                  # lo + hi*u^2 = lo*den + (hi-lo)*u^2
    acc = UniPoly()
    for k, c in enumerate(f.coeffs):
        if c:
            acc = acc + (num ** k) * (den ** (d - k)).scale(c)
    return poly_nonneg_on_reals(acc)


# ---------------------------------------------------------------------
# Quartics: invariants and the closed-form test
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class QuarticCoeffs:
    """f = c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0; c4 = 0 takes the
    degenerate branch."""

    c4: Fraction
    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for name in ("c4", "c3", "c2", "c1", "c0"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    def poly(self) -> UniPoly:
        return UniPoly([self.c0, self.c1, self.c2, self.c3, self.c4])

    @staticmethod
    def of(c4, c3, c2, c1, c0) -> "QuarticCoeffs":
        return QuarticCoeffs(as_rational(c4), as_rational(c3), as_rational(c2),
                             as_rational(c1), as_rational(c0))


@dataclass(frozen=True)
class QuarticInvariants:
    """sigma_i from the generic quartic Sturm chain (a22 = sigma1/(16 c4),
    a31 = 32 c4 sigma2 / sigma1^2, a40 = -sigma1^2 sigma3 / (64 c4 sigma2^2));
    kappa_i are the coefficients of sigma3 as a cubic in c0."""

    sigma1: Fraction
    sigma2: Fraction
    sigma3: Fraction
    kappa0: Fraction
    kappa1: Fraction
    kappa2: Fraction
    kappa3: Fraction


def quartic_invariants(c: QuarticCoeffs) -> QuarticInvariants:
    c4, c3, c2, c1, c0 = c.c4, c.c3, c.c2, c.c1, c.c0
    sigma1 = 8 * c2 * c4 - 3 * c3 ** 2
    sigma2 = (3 * c1 * c3 ** 3 - 14 * c1 * c2 * c3 * c4
              - c3 ** 2 * (c2 ** 2 - 6 * c0 * c4)
              + 2 * c4 * (2 * c2 ** 3 + 9 * c1 ** 2 * c4 - 8 * c0 * c2 * c4))
    # kappas: symbolic expansion of sigma3 in powers of c0
    kappa3 = -256 * c4 ** 3
    kappa2 = (27 * c3 ** 4 - 144 * c4 * c3 ** 2 * c2
              + 128 * c4 ** 2 * c2 ** 2 + 192 * c4 ** 2 * c3 * c1)
    kappa1 = (4 * c3 ** 2 * c2 ** 3 - 18 * c3 ** 3 * c2 * c1
              + 80 * c4 * c3 * c2 ** 2 * c1 + 6 * c4 * c3 ** 2 * c1 ** 2
              - 16 * c4 * c2 ** 4 - 144 * c4 ** 2 * c2 * c1 ** 2)
    kappa0 = (-c3 ** 2 * c2 ** 2 * c1 ** 2 + 4 * c4 * c2 ** 3 * c1 ** 2
              + 4 * c3 ** 3 * c1 ** 3 - 18 * c4 * c3 * c2 * c1 ** 3
              + 27 * c4 ** 2 * c1 ** 4)
    sigma3 = kappa3 * c0 ** 3 + kappa2 * c0 ** 2 + kappa1 * c0 + kappa0
    return QuarticInvariants(sigma1, sigma2, sigma3,
                             kappa0, kappa1, kappa2, kappa3)


@dataclass(frozen=True)
class QuarticTrace:
    """Which branch of the closed-form cascade decided, with the values
    that decided it.  kappa1/kappa2 are the literal cubic coefficients;
    the *_shifted fields are the Taylor coefficients of sigma3 at the
    actual c0 (the quantities the perturbation test actually reads)."""

    nonnegative: bool
    branch: str                      # "quartic" or "degenerate"
    decided_by: str
    gate: Optional[str] = None       # which of sigma1 >= 0 / sigma2 >= 0 held
    invariants: Optional[QuarticInvariants] = None
    kappa1_shifted: Optional[Fraction] = None
    kappa2_shifted: Optional[Fraction] = None


def quartic_nonneg_with_trace(c: QuarticCoeffs) -> QuarticTrace:
    c4, c3, c2, c1, c0 = c.c4, c.c3, c.c2, c.c1, c.c0
    if c4 == 0:
        # cubic-or-lower: nonnegative iff it is a nonnegative parabola
        if c3 != 0:
            return QuarticTrace(False, "degenerate", "c3!=0")
        if c2 == 0:
            ok = c1 == 0 and c0 >= 0
            return QuarticTrace(ok, "degenerate",
                                "constant" if ok else "linear-or-negative-constant")
        ok = c2 > 0 and c1 * c1 - 4 * c2 * c0 <= 0
        return QuarticTrace(ok, "degenerate",
                            "parabola" if ok else "parabola-negative-somewhere")
    if c4 < 0:
        return QuarticTrace(False, "quartic", "c4<0")
    inv = quartic_invariants(c)
    if inv.sigma1 >= 0:
        gate = "sigma1>=0"
    elif inv.sigma2 >= 0:
        gate = "sigma2>=0"
    else:
        return QuarticTrace(False, "quartic", "sigma1<0 and sigma2<0",
                            invariants=inv)
    if inv.sigma3 < 0:
        return QuarticTrace(True, "quartic", "sigma3<0", gate, inv)
    if inv.sigma3 > 0:
        return QuarticTrace(False, "quartic", "sigma3>0", gate, inv)
    # sigma3 = 0: sign of sigma3 under an infinitesimal upward bump of c0,
    # read from the Taylor coefficients at the actual c0
    k1s = 3 * inv.kappa3 * c0 * c0 + 2 * inv.kappa2 * c0 + inv.kappa1
    k2s = 3 * inv.kappa3 * c0 + inv.kappa2
    if k1s < 0:
        return QuarticTrace(True, "quartic", "sigma3=0,kappa1<0", gate, inv, k1s, k2s)
    if k1s == 0 and k2s <= 0:
        return QuarticTrace(True, "quartic", "sigma3=0,kappa1=0,kappa2<=0",
                            gate, inv, k1s, k2s)
    return QuarticTrace(False, "quartic",
                        "sigma3=0,kappa1>0" if k1s > 0 else "sigma3=0,kappa1=0,kappa2>0",
                        gate, inv, k1s, k2s)


def quartic_nonneg_closed_form(c: QuarticCoeffs) -> bool:
    """True iff c4 x^4 + ... + c0 >= 0 on all of R, by the sign cascade
    (no root finding)."""
    return quartic_nonneg_with_trace(c).nonnegative
