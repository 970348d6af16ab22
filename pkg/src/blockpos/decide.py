"""Exact decision procedures for 2 (x) 2 real operators: block positivity
over R, decomposability of partial-transpose-symmetric operators, and
sum-of-squares certificates.

Block positivity over R of a symmetric A reduces to a trace condition
(a quadratic form in y must be nonnegative) plus nonnegativity of the
quartic det A^(1)_y on the affine line y = (x, 1), plus PSD-ness of the
two axis blocks that dehomogenization drops.  Failures always come with
an exact product-vector counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exact import CQ, as_rational, rational_str, simplest_rational_between
from .operators import (BipartiteOperator, ProductVector, block_first,
                        char_poly_coeffs, is_psd, is_psd_matrix,
                        is_pt_symmetric, product_expectation)
from .polynomials import (QuarticCoeffs, QuarticTrace, UniPoly,
                          cauchy_root_bound, isolate_real_roots,
                          quartic_nonneg_with_trace, squarefree_part)


def _require_real_2x2(a: BipartiteOperator, what: str):
    if a.field != "real" or a.dim1 != 2 or a.dim2 != 2:
        raise ValueError(f"{what} requires a real 2x2 (x) 2x2 operator")


def _entry_re(a: BipartiteOperator, i, j, k, l) -> Fraction:
    return a.entry(i, j, k, l).re


def determinant_coefficients(a: BipartiteOperator) -> QuarticCoeffs:
    """Coefficients of det A^(1)_y as a binary quartic form in y = (x, z),
    expanded symbolically from the block's entry polynomials."""
    _require_real_2x2(a, "determinant_coefficients")
    # block entry (A^(1)_y)_{ac} = q0 x^2 + q1 xz + q2 z^2
    def quad(ai, ci):
        return (_entry_re(a, ai, 0, ci, 0),
                _entry_re(a, ai, 0, ci, 1) + _entry_re(a, ai, 1, ci, 0),
                _entry_re(a, ai, 1, ci, 1))

    def quad_mul(p, q):
        return (p[0] * q[0],
                p[0] * q[1] + p[1] * q[0],
                p[0] * q[2] + p[1] * q[1] + p[2] * q[0],
                p[1] * q[2] + p[2] * q[1],
                p[2] * q[2])

    m00, m01, m10, m11 = quad(0, 0), quad(0, 1), quad(1, 0), quad(1, 1)
    diag = quad_mul(m00, m11)
    off = quad_mul(m01, m10)
    c4, c3, c2, c1, c0 = (d - o for d, o in zip(diag, off))
    return QuarticCoeffs(c4, c3, c2, c1, c0)


@dataclass(frozen=True)
class BpRealTrace:
    """Record of which check decided block positivity over R."""

    trace_condition_holds: bool
    trace_sum: Fraction
    trace_det: Fraction
    quartic: Optional[QuarticTrace] = None
    boundary_blocks_psd: Optional[bool] = None


@dataclass(frozen=True)
class BpVerdict:
    holds: bool
    counterexample: Optional[ProductVector]
    certificate_trace: BpRealTrace

    def __post_init__(self):
        if not self.holds and self.counterexample is None:
            raise ValueError("failed verdicts must carry a counterexample")


def _negative_direction_2x2(m) -> Tuple[Fraction, Fraction]:
    """x with x^T M x < 0 for a symmetric rational 2x2 that is not PSD."""
    m00, m01, m11 = m[0][0].re, m[0][1].re, m[1][1].re
    if m00 < 0:
        return (Fraction(1), Fraction(0))
    if m11 < 0:
        return (Fraction(0), Fraction(1))
    # remaining failure mode: det < 0 with nonnegative diagonal
    if m00 > 0:
        return (-m01, m00)
    # m00 = 0, m01 != 0: value along (t, 1) is 2 m01 t + m11
    t = -(m11 + 1) / (2 * m01)
    return (t, Fraction(1))


def _negative_point_of_poly(f: UniPoly) -> Fraction:
    """Rational x with f(x) < 0, given that one exists."""
    if f.is_zero:
        raise ValueError("zero polynomial is nonnegative")
    candidates = [Fraction(0)]
    if f.degree > 0:
        iso = isolate_real_roots(f)
        outer = cauchy_root_bound(f) + 1
        candidates += [-outer, outer]
        for lo, hi, _ in iso.intervals:
            candidates += [lo, hi]
    for x in sorted(set(candidates), key=abs):
        if f(x) < 0:
            return x
    raise AssertionError("no negative point found; polynomial is nonnegative")


def bp_real_2x2(a: BipartiteOperator) -> BpVerdict:
    """Necessary and sufficient block positivity over R for a symmetric
    operator on R^2 (x) R^2, with exact counterexamples on failure."""
    _require_real_2x2(a, "bp_real_2x2")
    e = lambda i, j, k, l: _entry_re(a, i, j, k, l)
    p = e(0, 0, 0, 0) + e(1, 0, 1, 0)
    r = e(0, 1, 0, 1) + e(1, 1, 1, 1)
    q = (e(0, 0, 0, 1) + e(0, 1, 0, 0) + e(1, 0, 1, 1) + e(1, 1, 1, 0)) / 2
    trace_sum = p + r
    trace_det = p * r - q * q
    trace_ok = trace_sum >= 0 and trace_det >= 0

    if not trace_ok:
        if p < 0:
            y = (Fraction(1), Fraction(0))
        elif r < 0:
            y = (Fraction(0), Fraction(1))
        elif p > 0:
            y = (-q, p)
        else:                                 # p = 0, q != 0
            y = (-(r + 1) / (2 * q), Fraction(1))
        x = _negative_direction_2x2(block_first(a, y).matrix)
        cex = ProductVector(tuple(CQ(c) for c in x), tuple(CQ(c) for c in y))
        assert product_expectation(a, cex) < 0
        return BpVerdict(False, cex, BpRealTrace(False, trace_sum, trace_det))

    cs = determinant_coefficients(a)
    qtrace = quartic_nonneg_with_trace(cs)
    if not qtrace.nonnegative:
        x0 = _negative_point_of_poly(cs.poly())
        y = (x0, Fraction(1))
        x = _negative_direction_2x2(block_first(a, y).matrix)
        cex = ProductVector(tuple(CQ(c) for c in x), tuple(CQ(c) for c in y))
        assert product_expectation(a, cex) < 0
        return BpVerdict(False, cex,
                         BpRealTrace(True, trace_sum, trace_det, qtrace))

    # axis directions y = (1, 0) and y = (0, 1), lost by setting z = 1
    for y in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))):
        blk = block_first(a, y).matrix
        if not is_psd_matrix(blk):
            x = _negative_direction_2x2(blk)
            cex = ProductVector(tuple(CQ(c) for c in x), tuple(CQ(c) for c in y))
            assert product_expectation(a, cex) < 0
            return BpVerdict(False, cex,
                             BpRealTrace(True, trace_sum, trace_det, qtrace, False))

    return BpVerdict(True, None,
                     BpRealTrace(True, trace_sum, trace_det, qtrace, True))


# ---------------------------------------------------------------------
# SOS certificates and decomposability (2 (x) 2, PT-symmetric)
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class SosCertificate:
    """A = (B + B^tau)/2 with B PSD, B = A + t K, plus the rank-one terms
    of B as bilinear-form coefficient matrices: the biquadratic form of A
    equals sum_i weight_i (sum_ab coeffs_i[a][b] x^a y^b)^2."""

    t_parameter: Fraction
    b_operator: BipartiteOperator
    terms: Tuple[Tuple[Fraction, Tuple[Tuple[Fraction, ...], ...]], ...]

    def to_json(self) -> dict:
        return {
            "t": rational_str(self.t_parameter),
            "B": self.b_operator.to_json(),
            "terms": [{"weight": rational_str(w),
                       "coeffs": [[rational_str(c) for c in row] for row in m]}
                      for w, m in self.terms],
        }


def pt_antisymmetric_generator() -> BipartiteOperator:
    """K spanning the symmetric, PT-antisymmetric operators on 2 (x) 2:
    K = E14 + E41 - E23 - E32 in the product basis."""
    rows = [[0, 0, 0, 1],
            [0, 0, -1, 0],
            [0, -1, 0, 0],
            [1, 0, 0, 0]]
    return BipartiteOperator(2, 2, rows)


def symmetrized_gram(bset: Sequence[Sequence[Sequence]],
                     weights: Optional[Sequence] = None) -> BipartiteOperator:
    """A~_{ab,cd} = 1/2 sum_i w_i (B^i_{ab} B^i_{cd} + B^i_{ad} B^i_{cb});
    the PT-symmetric operator whose biquadratic form is
    sum_i w_i (B^i_{ab} x^a y^b)^2.  Weights default to 1."""
    if not bset:
        raise ValueError("need at least one matrix")
    ms = [[[as_rational(x) for x in row] for row in b] for b in bset]
    m1 = len(ms[0])
    m2 = len(ms[0][0])
    if any(len(b) != m1 or any(len(r) != m2 for r in b) for b in ms):
        raise ValueError("matrices must share a common shape")
    ws = [Fraction(1)] * len(ms) if weights is None else [as_rational(w) for w in weights]
    n = m1 * m2
    rows = [[Fraction(0)] * n for _ in range(n)]
    for w, b in zip(ws, ms):
        for a_ in range(m1):
            for b_ in range(m2):
                for c_ in range(m1):
                    for d_ in range(m2):
                        val = w * (b[a_][b_] * b[c_][d_] + b[a_][d_] * b[c_][b_]) / 2
                        rows[a_ * m2 + b_][c_ * m2 + d_] += val
    return BipartiteOperator(m1, m2, rows)


def _ldl_psd(mat) -> List[Tuple[Fraction, List[Fraction]]]:
    """Exact B = sum_k d_k v_k v_k^T for a PSD rational symmetric matrix;
    raises if a negative pivot shows the matrix was not PSD."""
    n = len(mat)
    s = [[mat[i][j].re for j in range(n)] for i in range(n)]
    out = []
    for k in range(n):
        d = s[k][k]
        if d < 0:
            raise ValueError("matrix is not PSD (negative pivot)")
        if d == 0:
            if any(s[k][j] != 0 for j in range(k, n)):
                raise ValueError("matrix is not PSD (zero pivot, nonzero row)")
            continue
        v = [Fraction(0)] * n
        v[k] = Fraction(1)
        for i in range(k + 1, n):
            v[i] = s[i][k] / d
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                s[i][j] -= v[i] * v[j] * d
        out.append((d, v))
    return out


def decompose_pt_symmetric(a: BipartiteOperator) -> Optional[SosCertificate]:
    """Search the one-parameter family B(t) = A + t K for a PSD member;
    on success return the SOS certificate extracted from its exact LDL^T
    factorization.  Returns None when no rational t works (in particular
    when A is not decomposable)."""
    _require_real_2x2(a, "decompose_pt_symmetric")
    if not is_pt_symmetric(a):
        raise ValueError("operator is not partial-transpose symmetric")
    k_op = pt_antisymmetric_generator()

    t_star = _find_psd_parameter(a, k_op)
    if t_star is None:
        return None
    b = a.add(k_op.scale(t_star))
    terms = tuple((d, _reshape_2x2(v)) for d, v in _ldl_psd(b.entries))
    return SosCertificate(t_star, b, terms)


def _reshape_2x2(v: Sequence[Fraction]) -> Tuple[Tuple[Fraction, ...], ...]:
    return ((v[0], v[1]), (v[2], v[3]))


def _rational_root_in(sf: UniPoly, lo: Fraction, hi: Fraction,
                      rounds: int = 64) -> Optional[Fraction]:
    """Exact rational root of squarefree sf inside an isolating interval,
    or None if the root is (very likely) irrational.  Each bisection
    halves the interval, so a root p/q is recovered once the width drops
    below 1/q^2; denominators beyond ~2^32 are given up on."""
    flo, fhi = sf(lo), sf(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    for _ in range(rounds):
        cand = simplest_rational_between(lo, hi)
        if sf(cand) == 0:
            return cand
        mid = (lo + hi) / 2
        fmid = sf(mid)
        if fmid == 0:
            return mid
        if (flo > 0) != (fmid > 0):
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    return None


def _find_psd_parameter(a: BipartiteOperator,
                        k_op: BipartiteOperator) -> Optional[Fraction]:
    """Rational t with A + tK PSD, or None.  The PSD set in t is a closed
    interval whose endpoints are roots of the principal-minor-sum
    polynomials W_k(t): interval endpoints and gap midpoints from root
    isolation cover every feasible set with interior, and exact rational
    roots cover the degenerate single-point case."""
    if is_psd(a):
        return Fraction(0)
    polys = _minor_sum_polynomials(a, k_op)
    candidates = {Fraction(0)}
    outer = Fraction(1)
    for w in polys:
        if w.degree <= 0:
            if w.lead < 0:
                return None
            continue
        sf = squarefree_part(w)
        iso = isolate_real_roots(w)
        outer = max(outer, cauchy_root_bound(w) + 1)
        for lo, hi, _ in iso.intervals:
            candidates.update((lo, hi, (lo + hi) / 2))
            root = _rational_root_in(sf, lo, hi)
            if root is not None:
                candidates.add(root)
    candidates.update((-outer, outer))
    ordered = sorted(candidates, key=lambda t: (abs(t), t))
    for t in ordered:
        if is_psd(a.add(k_op.scale(t))):
            return t
    return None


def _minor_sum_polynomials(a: BipartiteOperator,
                           k_op: BipartiteOperator) -> List[UniPoly]:
    """W_k(t) = e_k(A + tK) for k = 1..4, via exact interpolation."""
    n = a.total_dim
    ts = [Fraction(i) for i in range(-(n // 2), n // 2 + 1)][:n + 1]
    while len(ts) < n + 1:
        ts.append(Fraction(len(ts)))
    samples = [char_poly_coeffs(a.add(k_op.scale(t)).entries) for t in ts]
    polys = []
    for k in range(1, n + 1):
        pts = [(t, samples[i][k]) for i, t in enumerate(ts)]
        polys.append(_lagrange(pts))
    return polys


def _lagrange(pts: Sequence[Tuple[Fraction, Fraction]]) -> UniPoly:
    acc = UniPoly()
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        num = UniPoly([yi])
        den = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if i == j:
                continue
            num = num * UniPoly([-xj, 1])
            den *= (xi - xj)
        acc = acc + num.scale(1 / den)
    return acc


def sos_reconstruct(cert: SosCertificate) -> BipartiteOperator:
    """Rebuild the PT-symmetric operator from the certificate's weighted
    bilinear-form terms; must reproduce the certified operator exactly."""
    if not cert.terms:
        n1, n2 = cert.b_operator.dim1, cert.b_operator.dim2
        zero = [[Fraction(0)] * (n1 * n2) for _ in range(n1 * n2)]
        return BipartiteOperator(n1, n2, zero)
    return symmetrized_gram([m for _, m in cert.terms],
                            weights=[w for w, _ in cert.terms])
