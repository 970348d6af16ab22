"""Bipartite operators on H1 (x) H2 with exact entries: blocks, partial
transpose, PSD tests via principal-minor sums, and product-state
expectation values.

Basis convention: the product basis index (alpha, beta) is flattened with
beta fastest, i.e. row alpha*N2 + beta, matching the ordering
{|00>, |01>, |10>, |11>} for 2 (x) 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exact import CQ, ComplexRational, as_rational, rational_str

Matrix = Tuple[Tuple[ComplexRational, ...], ...]


def _coerce_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(ComplexRational.of(x) for x in row) for row in rows)


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(CQ(1) if i == j else CQ(0) for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    return tuple(tuple(sum((a[i][t] * b[t][j] for t in range(k)), CQ(0))
                       for j in range(m)) for i in range(n))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, k) -> Matrix:
    k = ComplexRational.of(k)
    return tuple(tuple(x * k for x in row) for row in a)


def mat_trace(a: Matrix) -> ComplexRational:
    return sum((a[i][i] for i in range(len(a))), CQ(0))


def char_poly_coeffs(a: Matrix) -> List[Fraction]:
    """Principal-minor sums e_0 = 1, e_1, ..., e_n of a Hermitian matrix
    (Faddeev-LeVerrier, exact); det(lambda I - A) = sum (-1)^k e_k lambda^(n-k)."""
    n = len(a)
    ident = mat_identity(n)
    cs = [None] * (n + 1)        # cs[j] = coefficient of lambda^j
    cs[n] = CQ(1)
    m = tuple(tuple(CQ(0) for _ in range(n)) for _ in range(n))
    for k in range(1, n + 1):
        m = mat_add(mat_mul(a, m), mat_scale(ident, cs[n - k + 1]))
        t = mat_trace(mat_mul(a, m))
        cs[n - k] = ComplexRational(-t.re / k, -t.im / k)
    es = []
    for j in range(n + 1):
        e = cs[n - j] if j % 2 == 0 else -cs[n - j]
        if e.im != 0:
            raise ValueError("matrix is not Hermitian (complex minor sum)")
        es.append(e.re)
    return es


@dataclass(frozen=True)
class ProductVector:
    """Pair (u, v) with u on the first factor, v on the second; neither zero."""

    u: Tuple[ComplexRational, ...]
    v: Tuple[ComplexRational, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(ComplexRational.of(x) for x in self.u))
        object.__setattr__(self, "v", tuple(ComplexRational.of(x) for x in self.v))
        if all(x == CQ(0) for x in self.u) or all(x == CQ(0) for x in self.v):
            raise ValueError("product vector factors must be nonzero")


@dataclass(frozen=True)
class Block:
    """Partial contraction of a bipartite operator against one factor."""

    side: str                  # "first" or "second"
    matrix: Matrix


class BipartiteOperator:
    """Hermitian operator on H1 (x) H2, entries exact complex rationals."""

    __slots__ = ("dim1", "dim2", "field", "entries")

    def __init__(self, dim1: int, dim2: int, entries: Sequence[Sequence],
                 field: Optional[str] = None):
        if dim1 < 1 or dim2 < 1:
            raise ValueError("dimensions must be positive")
        mat = _coerce_matrix(entries)
        n = dim1 * dim2
        if len(mat) != n or any(len(r) != n for r in mat):
            raise ValueError(f"entries must be {n}x{n}")
        for i in range(n):
            for j in range(i, n):
                if mat[i][j] != mat[j][i].conj():
                    raise ValueError(f"not Hermitian at ({i},{j})")
        all_real = all(x.im == 0 for row in mat for x in row)
        if field is None:
            field = "real" if all_real else "complex"
        if field not in ("real", "complex"):
            raise ValueError(f"bad field tag {field!r}")
        if field == "real" and not all_real:
            raise ValueError("real field tag but complex entries")
        object.__setattr__(self, "dim1", dim1)
        object.__setattr__(self, "dim2", dim2)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", mat)

    def __setattr__(self, *a):
        raise AttributeError("BipartiteOperator is immutable")

    # -- indexing -------------------------------------------------------

    def flat(self, alpha: int, beta: int) -> int:
        return alpha * self.dim2 + beta

    def entry(self, alpha: int, beta: int, gamma: int, delta: int) -> ComplexRational:
        """A_{alpha beta, gamma delta}, 0-based."""
        return self.entries[self.flat(alpha, beta)][self.flat(gamma, delta)]

    @property
    def total_dim(self) -> int:
        return self.dim1 * self.dim2

    def __eq__(self, other):
        return (isinstance(other, BipartiteOperator)
                and self.dim1 == other.dim1 and self.dim2 == other.dim2
                and self.entries == other.entries)

    def __repr__(self):
        return f"BipartiteOperator({self.dim1}x{self.dim2}, field={self.field})"

    # -- simple algebra ---------------------------------------------------

    def add(self, other: "BipartiteOperator") -> "BipartiteOperator":
        if (self.dim1, self.dim2) != (other.dim1, other.dim2):
            raise ValueError("dimension mismatch")
        return BipartiteOperator(self.dim1, self.dim2,
                                 mat_add(self.entries, other.entries))

    def scale(self, k) -> "BipartiteOperator":
        k = as_rational(k)       # keep Hermiticity: real scalars only
        return BipartiteOperator(self.dim1, self.dim2,
                                 mat_scale(self.entries, CQ(k)))

    def trace(self) -> Fraction:
        return mat_trace(self.entries).re

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        if self.field == "real":
            rows = [[rational_str(x.re) for x in row] for row in self.entries]
        else:
            rows = [[{"re": rational_str(x.re), "im": rational_str(x.im)}
                     for x in row] for row in self.entries]
        return {"dim1": self.dim1, "dim2": self.dim2, "field": self.field,
                "entries": rows}

    @staticmethod
    def from_json(obj: dict) -> "BipartiteOperator":
        try:
            dim1, dim2 = int(obj["dim1"]), int(obj["dim2"])
            field = obj.get("field")
            rows = [[ComplexRational.from_json(x) for x in row]
                    for row in obj["entries"]]
        except (KeyError, TypeError, ValueError) as e:
            raise ValueError(f"malformed operator JSON: {e}") from e
        return BipartiteOperator(dim1, dim2, rows, field=field)


def identity_operator(dim1: int, dim2: int) -> BipartiteOperator:
    return BipartiteOperator(dim1, dim2, mat_identity(dim1 * dim2))


def block_second(a: BipartiteOperator, u: Sequence) -> Block:
    """(A^(2)_u)_{beta delta} = sum_{alpha,gamma} A_{alpha beta, gamma delta}
    conj(u^alpha) u^gamma."""
    u = [ComplexRational.of(x) for x in u]
    if len(u) != a.dim1:
        raise ValueError("u must live on the first factor")
    if all(x == CQ(0) for x in u):
        raise ValueError("u must be nonzero")
    n2 = a.dim2
    rows = []
    for beta in range(n2):
        row = []
        for delta in range(n2):
            s = CQ(0)
            for alpha in range(a.dim1):
                for gamma in range(a.dim1):
                    s = s + a.entry(alpha, beta, gamma, delta) * u[alpha].conj() * u[gamma]
            row.append(s)
        rows.append(row)
    return Block("second", _coerce_matrix(rows))


def block_first(a: BipartiteOperator, v: Sequence) -> Block:
    """(A^(1)_v)_{alpha gamma} = sum_{beta,delta} A_{alpha beta, gamma delta}
    conj(v^beta) v^delta."""
    v = [ComplexRational.of(x) for x in v]
    if len(v) != a.dim2:
        raise ValueError("v must live on the second factor")
    if all(x == CQ(0) for x in v):
        raise ValueError("v must be nonzero")
    n1 = a.dim1
    rows = []
    for alpha in range(n1):
        row = []
        for gamma in range(n1):
            s = CQ(0)
            for beta in range(a.dim2):
                for delta in range(a.dim2):
                    s = s + a.entry(alpha, beta, gamma, delta) * v[beta].conj() * v[delta]
            row.append(s)
        rows.append(row)
    return Block("first", _coerce_matrix(rows))


def partial_transpose(a: BipartiteOperator) -> BipartiteOperator:
    """(A^tau)_{alpha beta, gamma delta} = A_{alpha delta, gamma beta}."""
    n1, n2 = a.dim1, a.dim2
    n = n1 * n2
    rows = [[CQ(0)] * n for _ in range(n)]
    for alpha in range(n1):
        for beta in range(n2):
            for gamma in range(n1):
                for delta in range(n2):
                    rows[alpha * n2 + beta][gamma * n2 + delta] = \
                        a.entry(alpha, delta, gamma, beta)
    return BipartiteOperator(n1, n2, rows)


def is_pt_symmetric(a: BipartiteOperator) -> bool:
    return partial_transpose(a) == a


def is_psd(a: BipartiteOperator) -> bool:
    """Exact PSD decision: all principal-minor sums nonnegative."""
    return is_psd_matrix(a.entries)


def is_psd_matrix(mat: Matrix) -> bool:
    return all(e >= 0 for e in char_poly_coeffs(mat))


def product_expectation(a: BipartiteOperator, p: ProductVector) -> Fraction:
    """<u (x) v | A (u (x) v)>, exact; real by Hermiticity."""
    if len(p.u) != a.dim1 or len(p.v) != a.dim2:
        raise ValueError("dimension mismatch")
    n2 = a.dim2
    w = [p.u[alpha] * p.v[beta] for alpha in range(a.dim1) for beta in range(n2)]
    acc = CQ(0)
    for i, wi in enumerate(w):
        if wi == CQ(0):
            continue
        for j, wj in enumerate(w):
            if wj == CQ(0):
                continue
            acc = acc + wi.conj() * a.entries[i][j] * wj
    assert acc.im == 0
    return acc.re


def witness_expectation(w: BipartiteOperator, rho: BipartiteOperator) -> Fraction:
    """Exact Tr(W rho); rho must be a state (PSD, unit trace)."""
    if w.total_dim != rho.total_dim:
        raise ValueError("dimension mismatch")
    if rho.trace() != 1:
        raise ValueError("rho must have unit trace")
    if not is_psd(rho):
        raise ValueError("rho must be positive semidefinite")
    n = w.total_dim
    acc = CQ(0)
    for i in range(n):
        for j in range(n):
            acc = acc + w.entries[i][j] * rho.entries[j][i]
    assert acc.im == 0
    return acc.re
