"""Exact block positivity, decomposability and sum-of-squares
certification for operators on small bipartite spaces, with a Sturm-based
quartic nonnegativity engine and a numeric product-state minimizer."""

from .exact import (CQ, ComplexRational, RadicalExpr, Rational, as_rational,
                    modulus_squared, rational_str, sign_of_radical_expr)
from .polynomials import (QuarticCoeffs, QuarticInvariants, QuarticTrace,
                          RootIsolation, UniPoly, count_real_roots_in,
                          isolate_real_roots, poly_nonneg_on_interval,
                          poly_nonneg_on_reals, quartic_invariants,
                          quartic_nonneg_closed_form, quartic_nonneg_with_trace,
                          squarefree_part, sturm_sequence)
from .operators import (BipartiteOperator, Block, ProductVector, block_first,
                        block_second, identity_operator, is_psd,
                        is_pt_symmetric, partial_transpose,
                        product_expectation, witness_expectation)
from .decide import (BpVerdict, SosCertificate, bp_real_2x2,
                     decompose_pt_symmetric, determinant_coefficients,
                     pt_antisymmetric_generator, sos_reconstruct,
                     symmetrized_gram)
from .family import (FamilyParams, GridSpec, RegionPoint, bp_family_case_a,
                     bp_family_case_b, bp_family_general, bp_family_real,
                     family_e, family_f, family_f_prime, is_case_a, is_case_b,
                     parse_complex_rational, psd_family, region_scan,
                     region_scan_csv)
from .search import (SearchConfig, SearchResult, minimize_product_form,
                     random_separable_state, rationalize_argmin,
                     verify_violation)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
