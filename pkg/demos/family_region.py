#!/usr/bin/env python3
"""Map the PSD and block positive regions of the family F(a,b,c).

Scans the real (a, c) plane for a few fixed b slices, prints region
counts, locates the transition points on the b axis exactly, and writes
a CSV (plus a PNG when matplotlib is importable).
"""

from fractions import Fraction as F

from blockpos import (FamilyParams, CQ, GridSpec, bp_family_real, psd_family,
                      region_scan, region_scan_csv)

OUT_CSV = "family_region_b0.csv"


def b_axis_transitions():
    print("Exact transitions on the a = c = 0 axis:")
    for b in (F(1, 2), F(51, 100), F(1), F(101, 100)):
        p = FamilyParams(CQ(0), CQ(b), CQ(0))
        print(f"  b = {str(b):>7}: psd = {psd_family(p)!s:5}  "
              f"block positive = {bp_family_real(p)}")
    print("  (psd up to b = 1/2 inclusive, block positive up to b = 1)")


def slice_scan(b, step=F(1, 25)):
    spec = GridSpec((F(-1), F(1)), b, (F(-1), F(1)), step)
    pts = region_scan(spec)
    n_psd = sum(p.psd for p in pts)
    n_bp = sum(p.block_positive for p in pts)
    assert not any(p.psd and not p.block_positive for p in pts)
    print(f"  b = {str(b):>4}: {len(pts)} points, psd {n_psd}, "
          f"block positive {n_bp}, witnesses (bp and not psd) {n_bp - n_psd}")
    return pts


def maybe_plot(pts):
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        return
    import numpy as np
    a = np.array([float(p.params.a.re) for p in pts])
    c = np.array([float(p.params.c.re) for p in pts])
    cls = np.array([2 if p.psd else (1 if p.block_positive else 0) for p in pts])
    fig, ax = plt.subplots(figsize=(5, 5))
    for val, color, label in ((2, "0.45", "psd"), (1, "0.8", "bp only"),
                              (0, "white", "neither")):
        m = cls == val
        ax.scatter(a[m], c[m], c=color, s=6, label=label, edgecolors="none")
    ax.set_xlabel("a")
    ax.set_ylabel("c")
    ax.set_title("F(a, 0, c): PSD region inside the block positive region")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig("family_region_b0.png", dpi=150)
    print("  wrote family_region_b0.png")


def main():
    print("=" * 72)
    print("Region scan for F(a,b,c), real parameters")
    print("=" * 72)
    b_axis_transitions()
    print("\n(a, c) slices at fixed b (step 1/25):")
    pts_b0 = slice_scan(F(0))
    for b in (F(1, 4), F(1, 2), F(3, 4)):
        slice_scan(b)
    with open(OUT_CSV, "w") as fh:
        fh.write(region_scan_csv(pts_b0))
    print(f"\n  wrote {OUT_CSV} ({len(pts_b0)} rows)")
    maybe_plot(pts_b0)


if __name__ == "__main__":
    main()
