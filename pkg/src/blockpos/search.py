"""Numerical oracle: minimize <u (x) v | A (u (x) v)> over unit product
vectors by multistart projected gradient descent plus a deterministic
grid pass, and generate random separable states for witness demos.

The searcher is one-sided: a violation_found verdict comes with an
argmin that exact re-evaluation can confirm, while no_violation_found
only reports the best margin achieved.  Exact positive verdicts belong
to the closed-form deciders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .exact import CQ, ComplexRational
from .operators import BipartiteOperator, ProductVector, product_expectation

MAX_FACTOR_DIM = 4


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 64
    max_iterations: int = 200
    tolerance: float = 1e-7
    seed: int = 0

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.restarts < 1 or self.max_iterations < 1:
            raise ValueError("restarts and max_iterations must be positive")


@dataclass(frozen=True)
class SearchResult:
    min_value: float
    argmin_u: Tuple[complex, ...]
    argmin_v: Tuple[complex, ...]
    verdict: str                     # "violation_found" | "no_violation_found"
    margin: float

    def to_json(self) -> dict:
        fmt = lambda z: {"re": f"{z.real:.17g}", "im": f"{z.imag:.17g}"}
        return {"min_value": f"{self.min_value:.17g}",
                "argmin_u": [fmt(z) for z in self.argmin_u],
                "argmin_v": [fmt(z) for z in self.argmin_v],
                "verdict": self.verdict,
                "margin": f"{self.margin:.17g}"}


def _as_tensor(a: BipartiteOperator) -> Tuple[np.ndarray, np.ndarray]:
    n1, n2 = a.dim1, a.dim2
    m = np.array([[complex(x) for x in row] for row in a.entries])
    return m, m.reshape(n1, n2, n1, n2)


def _value(mf: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    w = (u[:, None] * v[None, :]).ravel()
    return float(np.real(w.conj() @ (mf @ w)))


def _block1(t: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.einsum("abcd,b,d->ac", t, v.conj(), v)


def _block2(t: np.ndarray, u: np.ndarray) -> np.ndarray:
    return np.einsum("abcd,a,c->bd", t, u.conj(), u)


def _normalize(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x)


def _descend(mf: np.ndarray, t: np.ndarray, u: np.ndarray, v: np.ndarray,
             real: bool, max_iter: int) -> Tuple[float, np.ndarray, np.ndarray]:
    val = _value(mf, u, v)
    for _ in range(max_iter):
        improved = False
        for which in (0, 1):
            if which == 0:
                g = 2.0 * _block1(t, v) @ u
            else:
                g = 2.0 * _block2(t, u) @ v
            if real:
                g = g.real.astype(complex)
            x = u if which == 0 else v
            # Riemannian gradient: project out the radial component
            g = g - (np.real(np.vdot(x, g))) * x
            gn = np.linalg.norm(g)
            if gn < 1e-15:
                continue
            step = 0.5
            while step > 1e-13:
                cand = _normalize(x - step * g)
                cval = (_value(mf, cand, v) if which == 0 else _value(mf, u, cand))
                if cval < val - 1e-4 * step * gn * gn:
                    if which == 0:
                        u = cand
                    else:
                        v = cand
                    val = cval
                    improved = True
                    break
                step *= 0.5
        if not improved:
            break
    return val, u, v


def _grid_candidates(t: np.ndarray, real: bool) -> Tuple[float, np.ndarray, np.ndarray]:
    """Deterministic global grid for 2 (x) 2 (>= 10^4 points)."""
    if real:
        th = np.linspace(0.0, np.pi, 128, endpoint=False)
        us = np.stack([np.cos(th), np.sin(th)], axis=1)
        vs = us
    else:
        th = np.linspace(0.0, np.pi / 2, 10)
        ph = np.linspace(0.0, 2 * np.pi, 10, endpoint=False)
        grid = [np.array([np.cos(a), np.sin(a) * np.exp(1j * p)])
                for a in th for p in ph]
        us = np.stack(grid)
        vs = us
    vals = np.real(np.einsum("abcd,na,nc,mb,md->nm",
                             t, us.conj(), us, vs.conj(), vs))
    i, j = np.unravel_index(np.argmin(vals), vals.shape)
    return float(vals[i, j]), us[i].astype(complex), vs[j].astype(complex)


def _polish(mf: np.ndarray, u: np.ndarray, v: np.ndarray, real: bool,
            val: float) -> Tuple[float, np.ndarray, np.ndarray]:
    """Deterministic shrinking-step coordinate probes around the best point."""
    n1, n2 = u.size, v.size
    dirs_u = [np.eye(n1, dtype=complex)[k] for k in range(n1)]
    dirs_v = [np.eye(n2, dtype=complex)[k] for k in range(n2)]
    if not real:
        dirs_u += [1j * d for d in dirs_u]
        dirs_v += [1j * d for d in dirs_v]
    for scale in (0.3, 0.1, 0.03, 0.01, 3e-3, 1e-3, 3e-4, 1e-4, 1e-5, 1e-6):
        moved = True
        while moved:
            moved = False
            for d in dirs_u:
                for s in (scale, -scale):
                    cand = _normalize(u + s * d)
                    cval = _value(mf, cand, v)
                    if cval < val - 1e-18:
                        u, val, moved = cand, cval, True
            for d in dirs_v:
                for s in (scale, -scale):
                    cand = _normalize(v + s * d)
                    cval = _value(mf, u, cand)
                    if cval < val - 1e-18:
                        v, val, moved = cand, cval, True
    return val, u, v


def _gauge_fix(x: np.ndarray) -> np.ndarray:
    for comp in x:
        if abs(comp) > 1e-12:
            phase = comp / abs(comp)
            return x / phase
    return x


def minimize_product_form(a: BipartiteOperator, field: str,
                          cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """Best product-state expectation found for A; deterministic given
    cfg.seed.  field 'real' restricts to real unit vectors."""
    if field not in ("real", "complex"):
        raise ValueError("field must be 'real' or 'complex'")
    if a.dim1 > MAX_FACTOR_DIM or a.dim2 > MAX_FACTOR_DIM:
        raise ValueError(f"dimensions above {MAX_FACTOR_DIM} (x) {MAX_FACTOR_DIM} "
                         "are not supported")
    if field == "real" and a.field != "real":
        raise ValueError("real search needs a real operator")
    real = field == "real"
    mf, t = _as_tensor(a)
    n1, n2 = a.dim1, a.dim2

    best_val, best_u, best_v = np.inf, None, None
    starts: List[Tuple[np.ndarray, np.ndarray]] = []
    if n1 == 2 and n2 == 2:
        gval, gu, gv = _grid_candidates(t, real)
        starts.append((gu, gv))
    for k in range(cfg.restarts):
        rng = np.random.default_rng([cfg.seed, k])
        if real:
            u = _normalize(rng.standard_normal(n1))
            v = _normalize(rng.standard_normal(n2))
        else:
            u = _normalize(rng.standard_normal(n1) + 1j * rng.standard_normal(n1))
            v = _normalize(rng.standard_normal(n2) + 1j * rng.standard_normal(n2))
        starts.append((u.astype(complex), v.astype(complex)))
    for u0, v0 in starts:
        val, u, v = _descend(mf, t, u0, v0, real, cfg.max_iterations)
        if val < best_val:
            best_val, best_u, best_v = val, u, v

    best_val, best_u, best_v = _polish(mf, best_u, best_v, real, best_val)
    if real:
        best_u, best_v = best_u.real.astype(complex), best_v.real.astype(complex)
    best_u, best_v = _gauge_fix(best_u), _gauge_fix(best_v)
    verdict = "violation_found" if best_val < -cfg.tolerance else "no_violation_found"
    return SearchResult(best_val, tuple(complex(z) for z in best_u),
                        tuple(complex(z) for z in best_v), verdict, best_val)


def rationalize_argmin(res: SearchResult,
                       max_denominator: int = 10 ** 6) -> ProductVector:
    """Round the floating argmin to exact complex rationals for
    re-verification through product_expectation."""
    def rat(z: complex) -> ComplexRational:
        return ComplexRational(Fraction(z.real).limit_denominator(max_denominator),
                               Fraction(z.imag).limit_denominator(max_denominator))
    return ProductVector(tuple(rat(z) for z in res.argmin_u),
                         tuple(rat(z) for z in res.argmin_v))


def verify_violation(a: BipartiteOperator, res: SearchResult,
                     max_denominator: int = 10 ** 6) -> bool:
    """Exact soundness check of a violation_found result."""
    pv = rationalize_argmin(res, max_denominator)
    return product_expectation(a, pv) < 0


def random_separable_state(dims: Tuple[int, int], count: int,
                           seed: int = 0) -> BipartiteOperator:
    """Convex mixture of `count` random product pure states; exact
    rational entries (components rounded to denominator <= 10^6 before
    the outer products), PSD with trace exactly 1 by construction."""
    if count < 1:
        raise ValueError("count must be >= 1")
    n1, n2 = dims
    rng = np.random.default_rng(seed)
    n = n1 * n2
    acc = [[CQ(0)] * n for _ in range(n)]

    def rat(x: float) -> Fraction:
        return Fraction(float(x)).limit_denominator(10 ** 6)

    for _ in range(count):
        u = rng.standard_normal(n1) + 1j * rng.standard_normal(n1)
        v = rng.standard_normal(n2) + 1j * rng.standard_normal(n2)
        u /= np.linalg.norm(u)
        v /= np.linalg.norm(v)
        w = np.kron(u, v)
        wr = [ComplexRational(rat(z.real), rat(z.imag)) for z in w]
        for i in range(n):
            for j in range(n):
                acc[i][j] = acc[i][j] + wr[i] * wr[j].conj()
    tr = sum((acc[i][i].re for i in range(n)), Fraction(0))
    inv = 1 / tr
    acc = [[x * CQ(inv) for x in row] for row in acc]
    return BipartiteOperator(n1, n2, acc)
