"""Bipartite operators: blocks, partial transpose, PSD, expectations."""

import random
from fractions import Fraction as F

import numpy as np
import pytest

from blockpos.exact import CQ
from blockpos.family import FamilyParams, family_e, family_f, family_f_prime
from blockpos.operators import (BipartiteOperator, ProductVector, block_first,
                                block_second, char_poly_coeffs,
                                identity_operator, is_psd, is_pt_symmetric,
                                partial_transpose, product_expectation,
                                witness_expectation)

DIAG_SWAP = BipartiteOperator(2, 2, [[1, 0, 0, 0], [0, 1, 0, 0],
                                     [0, 0, 1, 0], [0, 0, 0, -1]])


def rand_symmetric(rng, dim1=2, dim2=2, lo=-4, hi=4):
    n = dim1 * dim2
    m = [[F(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(n)]
         for _ in range(n)]
    for i in range(n):
        for j in range(i):
            m[j][i] = m[i][j]
    return BipartiteOperator(dim1, dim2, m)


def rand_hermitian(rng, dim1=2, dim2=2, lo=-4, hi=4):
    n = dim1 * dim2
    m = [[CQ(0)] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = CQ(F(rng.randint(lo, hi), rng.randint(1, 3)))
        for j in range(i + 1, n):
            z = CQ(F(rng.randint(lo, hi), rng.randint(1, 3)),
                   F(rng.randint(lo, hi), rng.randint(1, 3)))
            m[i][j] = z
            m[j][i] = z.conj()
    return BipartiteOperator(dim1, dim2, m)


def to_numpy(op):
    return np.array([[complex(x) for x in row] for row in op.entries])


class TestConstruction:
    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            BipartiteOperator(2, 2, [[0, 1, 0, 0], [0, 0, 0, 0],
                                     [0, 0, 0, 0], [0, 0, 0, 0]])

    def test_field_inference(self):
        assert identity_operator(2, 2).field == "real"
        h = BipartiteOperator(2, 2, [[0, CQ(0, 1), 0, 0], [CQ(0, -1), 0, 0, 0],
                                     [0, 0, 0, 0], [0, 0, 0, 0]])
        assert h.field == "complex"

    def test_real_tag_on_complex_entries_rejected(self):
        with pytest.raises(ValueError):
            BipartiteOperator(2, 2, [[0, CQ(0, 1), 0, 0], [CQ(0, -1), 0, 0, 0],
                                     [0, 0, 0, 0], [0, 0, 0, 0]], field="real")

    def test_json_round_trip(self):
        rng = random.Random(3)
        for make in (rand_symmetric, rand_hermitian):
            op = make(rng)
            assert BipartiteOperator.from_json(op.to_json()) == op


class TestBlocks:
    def test_block_second_family(self):
        params = FamilyParams.of("1/3", "2/5", "-1/7")
        f = family_f(params)
        blk = block_second(f, (1, 0)).matrix
        assert blk[0][0] == CQ(F(1, 2)) and blk[1][1] == CQ(F(1, 2))
        assert blk[0][1] == params.a and blk[1][0] == params.a.conj()

    def test_block_second_identity(self):
        blk = block_second(identity_operator(2, 2), (1, 1)).matrix
        assert blk == ((CQ(2), CQ(0)), (CQ(0), CQ(2)))

    def test_block_second_offdiag(self):
        f = family_f(FamilyParams.of("0", "1", "0"))
        blk = block_second(f, (1, 1)).matrix
        assert blk == ((CQ(1), CQ(1)), (CQ(1), CQ(1)))

    def test_block_first_identity(self):
        blk = block_first(identity_operator(2, 2), (2, 0)).matrix
        assert blk == ((CQ(4), CQ(0)), (CQ(0), CQ(4)))

    def test_block_first_diag(self):
        blk = block_first(DIAG_SWAP, (0, 1)).matrix
        assert blk == ((CQ(1), CQ(0)), (CQ(0), CQ(-1)))

    def test_block_first_family(self):
        f = family_f(FamilyParams.of("1/3", "2/5", "-1/7"))
        blk = block_first(f, (1, 0)).matrix
        assert blk == ((CQ(F(1, 2)), CQ(0)), (CQ(0), CQ(F(1, 2))))

    def test_blocks_quadratic_form_identity(self):
        rng = random.Random(5)
        for _ in range(60):
            a = rand_hermitian(rng)
            u = tuple(CQ(F(rng.randint(-3, 3)), F(rng.randint(-3, 3)))
                      for _ in range(2))
            v = tuple(CQ(F(rng.randint(-3, 3)), F(rng.randint(-3, 3)))
                      for _ in range(2))
            if all(x == CQ(0) for x in u) or all(x == CQ(0) for x in v):
                continue
            pv = ProductVector(u, v)
            val = product_expectation(a, pv)
            b2 = block_second(a, u).matrix
            quad2 = sum((v[i].conj() * b2[i][j] * v[j]
                         for i in range(2) for j in range(2)), CQ(0))
            b1 = block_first(a, v).matrix
            quad1 = sum((u[i].conj() * b1[i][j] * u[j]
                         for i in range(2) for j in range(2)), CQ(0))
            assert quad1 == quad2 == CQ(val)

    def test_dimension_and_zero_vector_errors(self):
        with pytest.raises(ValueError):
            block_second(identity_operator(2, 2), (1, 0, 0))
        with pytest.raises(ValueError):
            block_first(identity_operator(2, 2), (0, 0))


class TestPartialTranspose:
    def test_identity_fixed(self):
        ident = identity_operator(2, 2)
        assert partial_transpose(ident) == ident
        assert is_pt_symmetric(ident)

    def test_family_symmetrization(self):
        a, b, c = F(1, 3), F(2, 5), F(-1, 7)
        f = family_f(FamilyParams(CQ(a), CQ(b), CQ(c)))
        sym = f.add(partial_transpose(f)).scale(F(1, 2))
        assert sym == family_f_prime(a, b, c)
        assert is_pt_symmetric(sym)

    def test_family_f_not_pt_symmetric(self):
        f = family_f(FamilyParams.of("0", "1/2", "0"))
        assert not is_pt_symmetric(f)

    def test_e_family_swap(self):
        s, p, q, r = F(1), F(2), F(3), F(4)
        assert partial_transpose(family_e(s, p, q, r)) == family_e(s, r, q, p)

    def test_involution_and_hermiticity(self):
        rng = random.Random(9)
        for _ in range(40):
            a = rand_hermitian(rng)
            assert partial_transpose(partial_transpose(a)) == a


class TestPsd:
    def test_identity(self):
        assert is_psd(identity_operator(2, 2))

    def test_family_examples(self):
        assert not is_psd(family_f(FamilyParams.of("0", "3/5", "0")))
        assert is_psd(family_f(FamilyParams.of("0", "2/5", "0")))

    def test_e_spectrum_symmetry(self):
        rng = random.Random(15)
        for _ in range(200):
            s, p, q, r = (F(rng.randint(-6, 6), rng.randint(1, 4))
                          for _ in range(4))
            e1, e2 = family_e(s, p, q, r), family_e(s, r, q, p)
            assert char_poly_coeffs(e1.entries) == char_poly_coeffs(e2.entries)
            assert is_psd(e1) == is_psd(e2)

    def test_agreement_with_floating_eigenvalues(self):
        rng = random.Random(17)
        done = 0
        while done < 1000:
            a = rand_hermitian(rng)
            ev = np.linalg.eigvalsh(to_numpy(a))
            if min(abs(ev)) < 1e-9:
                continue
            assert is_psd(a) == bool(ev.min() > 0)
            done += 1


class TestExpectations:
    def test_identity(self):
        pv = ProductVector((CQ(F(3, 5)), CQ(F(4, 5))), (CQ(1), CQ(0)))
        assert product_expectation(identity_operator(2, 2), pv) == 1

    def test_family_zero(self):
        f = family_f(FamilyParams.of("0", "1", "0"))
        pv = ProductVector((CQ(1), CQ(1)), (CQ(1), CQ(-1)))
        assert product_expectation(f, pv) == 0

    def test_diag_negative(self):
        pv = ProductVector((CQ(0), CQ(1)), (CQ(0), CQ(1)))
        assert product_expectation(DIAG_SWAP, pv) == -1

    def test_witness_identity_quarter(self):
        w = identity_operator(2, 2).scale(F(1, 4))
        rho = BipartiteOperator(2, 2, [[1, 0, 0, 0], [0, 0, 0, 0],
                                       [0, 0, 0, 0], [0, 0, 0, 0]])
        assert witness_expectation(w, rho) == F(1, 4)

    def test_witness_singlet(self):
        w = family_f(FamilyParams.of("0", "4/5", "0"))
        h = F(1, 2)
        singlet = BipartiteOperator(2, 2, [[0, 0, 0, 0], [0, h, -h, 0],
                                           [0, -h, h, 0], [0, 0, 0, 0]])
        assert witness_expectation(w, singlet) == F(-3, 10)

    def test_witness_product_state(self):
        w = family_f(FamilyParams.of("0", "4/5", "0"))
        rho = BipartiteOperator(2, 2, [[1, 0, 0, 0], [0, 0, 0, 0],
                                       [0, 0, 0, 0], [0, 0, 0, 0]])
        assert witness_expectation(w, rho) == F(1, 2)

    def test_witness_rejects_non_state(self):
        w = identity_operator(2, 2)
        not_normalized = identity_operator(2, 2)
        with pytest.raises(ValueError):
            witness_expectation(w, not_normalized)
        neg = DIAG_SWAP.scale(F(1, 2))
        with pytest.raises(ValueError):
            witness_expectation(w, neg)
