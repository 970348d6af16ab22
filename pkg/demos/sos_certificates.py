#!/usr/bin/env python3
"""Sum-of-squares certificates for PT-symmetric block positive operators.

A PT-symmetric A on R^2 (x) R^2 is block positive iff its biquadratic
form is a sum of squares of bilinear forms, iff A = (B + B^tau)/2 for
some PSD B.  The search space for B is the single line A + t K; the
certificate extracts the squares from an exact LDL^T factorization.
"""

import json
from fractions import Fraction as F

from blockpos import (bp_real_2x2, decompose_pt_symmetric, family_f_prime,
                      is_psd, partial_transpose, sos_reconstruct,
                      BipartiteOperator)


def show_certificate(name, a):
    print(f"\n{name}")
    print(f"  block positive over R: {bp_real_2x2(a).holds}; "
          f"psd: {is_psd(a)}")
    cert = decompose_pt_symmetric(a)
    if cert is None:
        print("  no decomposition (not block positive)")
        return
    print(f"  B = A + tK with t = {cert.t_parameter}; B is PSD: "
          f"{is_psd(cert.b_operator)}")
    print("  squares (weight, bilinear form coefficients):")
    for w, m in cert.terms:
        print(f"    {str(w):>8}  *  ({m[0][0]} x1y1 + {m[0][1]} x1y2 + "
              f"{m[1][0]} x2y1 + {m[1][1]} x2y2)^2")
    assert sos_reconstruct(cert) == a
    print("  reconstruction from the squares reproduces A exactly")


def main():
    print("=" * 72)
    print("Decomposability and SOS certificates on R^2 (x) R^2")
    print("=" * 72)

    show_certificate("F'(0, 4/5, 0): PSD already, so t = 0 works",
                     family_f_prime(0, F(4, 5), 0))

    h = F(1, 2)
    singlet = BipartiteOperator(2, 2, [[0, 0, 0, 0], [0, h, -h, 0],
                                       [0, -h, h, 0], [0, 0, 0, 0]])
    sym = singlet.add(partial_transpose(singlet)).scale(F(1, 2))
    show_certificate("symmetrized singlet projector: not PSD, needs t = 1/4",
                     sym)

    show_certificate("F'(0, 3, 0): not block positive, no certificate",
                     family_f_prime(0, 3, 0))

    cert = decompose_pt_symmetric(family_f_prime(F(1, 5), F(2, 5), F(-1, 5)))
    print("\nCertificates serialize to JSON:")
    print(json.dumps(cert.to_json(), indent=2)[:400] + " ...")


if __name__ == "__main__":
    main()
