#!/usr/bin/env python3
"""Walk through the exact quartic nonnegativity machinery.

For f = c4 x^4 + ... + c0 the decision is a pure sign cascade in the
Sturm-chain invariants sigma1, sigma2, sigma3 (sigma3 is minus the
discriminant) plus, on the sigma3 = 0 boundary, the Taylor coefficients
of sigma3 in the constant term.  No roots are ever computed; the
root-based oracle is shown alongside as an independent check.
"""

from fractions import Fraction as F

from blockpos import (QuarticCoeffs, UniPoly, isolate_real_roots,
                      poly_nonneg_on_reals, quartic_invariants,
                      quartic_nonneg_with_trace)

CASES = [
    ("(x^2-1)^2, double roots at +-1", QuarticCoeffs.of(1, 0, -2, 0, 1)),
    ("x^4 + 1, no real roots", QuarticCoeffs.of(1, 0, 0, 0, 1)),
    ("x^4, quadruple root", QuarticCoeffs.of(1, 0, 0, 0, 0)),
    ("x^4 - 1, sign change", QuarticCoeffs.of(1, 0, 0, 0, -1)),
    ("(2x^2-3x-5)^2, square with real roots", QuarticCoeffs.of(4, -12, -11, 30, 25)),
    ("x^2 + 1 (degenerate, c4 = 0)", QuarticCoeffs.of(0, 0, 1, 0, 1)),
    ("generic positive x^4+x^3+x^2+x+1", QuarticCoeffs.of(1, 1, 1, 1, 1)),
]


def main():
    print("=" * 72)
    print("Quartic nonnegativity: closed form vs root-based oracle")
    print("=" * 72)
    for label, cs in CASES:
        tr = quartic_nonneg_with_trace(cs)
        inv = quartic_invariants(cs)
        oracle = poly_nonneg_on_reals(cs.poly())
        print(f"\n{label}")
        print(f"  coefficients (c4..c0): {cs.c4}, {cs.c3}, {cs.c2}, {cs.c1}, {cs.c0}")
        print(f"  sigma1={inv.sigma1}  sigma2={inv.sigma2}  sigma3={inv.sigma3}")
        print(f"  kappa1={inv.kappa1}  kappa2={inv.kappa2}  kappa3={inv.kappa3}")
        if tr.kappa1_shifted is not None:
            print(f"  shifted at c0: kappa1~={tr.kappa1_shifted}  "
                  f"kappa2~={tr.kappa2_shifted}")
        print(f"  decision: {'nonnegative' if tr.nonnegative else 'negative somewhere'}"
              f"  via {tr.branch}/{tr.decided_by}"
              + (f" (gate {tr.gate})" if tr.gate else ""))
        print(f"  oracle agrees: {oracle == tr.nonnegative}")
        if not tr.nonnegative and cs.poly().degree >= 1:
            iso = isolate_real_roots(cs.poly())
            ivs = ", ".join(f"({lo}, {hi}) x{m}" for lo, hi, m in iso.intervals)
            print(f"  real roots isolated: {ivs or 'none'}")

    print("\nSturm counting on an interval:")
    p = UniPoly([-6, 11, -6, 1])      # (x-1)(x-2)(x-3)
    from blockpos import count_real_roots_in
    print(f"  (x-1)(x-2)(x-3) has "
          f"{count_real_roots_in(p, F(3, 2), F(10))} roots in (3/2, 10) "
          f"and {count_real_roots_in(p)} on all of R")


if __name__ == "__main__":
    main()
