"""Command line interface.

Subcommands: check (operator deciders), family (closed-form family
conditions), quartic (degree-4 nonnegativity with internal consistency
check), scan (parameter region CSV), witness (Tr(W rho)).

Reports are JSON on stdout: {"schema": 1, "input_digest": ..., "verdicts":
{...}, "timings_ms": {...}}.  Exit codes: 0 all requested properties
hold, 1 some fail, 2 input error, 3 internal inconsistency (quartic
closed form disagreeing with the root-based oracle).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from typing import Dict, Optional

from .decide import bp_real_2x2, decompose_pt_symmetric
from .exact import as_rational, rational_str
from .family import (FamilyParams, GridSpec, bp_family_case_a, bp_family_case_b,
                     bp_family_general, is_case_a, is_case_b, psd_family,
                     region_scan, region_scan_csv)
from .operators import (BipartiteOperator, is_psd, is_pt_symmetric,
                        witness_expectation)
from .polynomials import (QuarticCoeffs, poly_nonneg_on_reals,
                          quartic_invariants, quartic_nonneg_with_trace)
from .search import SearchConfig, minimize_product_form


class InputError(Exception):
    pass


def _digest(obj) -> str:
    return hashlib.sha256(
        json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def _load_operator(path: str) -> BipartiteOperator:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read operator file {path}: {e}") from e
    try:
        return BipartiteOperator.from_json(data)
    except ValueError as e:
        raise InputError(f"{path}: {e}") from e


class Report:
    """Accumulates named verdicts with per-check timings."""

    def __init__(self, input_digest: str):
        self.input_digest = input_digest
        self.verdicts: Dict[str, dict] = {}
        self.timings: Dict[str, float] = {}

    def run(self, name: str, fn):
        t0 = time.perf_counter()
        self.verdicts[name] = fn()
        self.timings[name] = (time.perf_counter() - t0) * 1000.0

    def holds(self) -> bool:
        return all(v.get("result") is not False for v in self.verdicts.values())

    def any_false(self) -> bool:
        return any(v.get("result") is False for v in self.verdicts.values())

    def emit(self) -> dict:
        doc = {"schema": 1, "input_digest": self.input_digest,
               "verdicts": self.verdicts,
               "timings_ms": {k: round(v, 3) for k, v in self.timings.items()}}
        json.dump(doc, sys.stdout, sort_keys=True, indent=2)
        sys.stdout.write("\n")
        return doc


def _trace_json(tr) -> dict:
    out = {"nonnegative": tr.nonnegative, "branch": tr.branch,
           "decided_by": tr.decided_by}
    if tr.gate:
        out["gate"] = tr.gate
    if tr.invariants:
        inv = tr.invariants
        out["sigma"] = [rational_str(inv.sigma1), rational_str(inv.sigma2),
                        rational_str(inv.sigma3)]
        out["kappa"] = [rational_str(inv.kappa0), rational_str(inv.kappa1),
                        rational_str(inv.kappa2), rational_str(inv.kappa3)]
    if tr.kappa1_shifted is not None:
        out["kappa_shifted"] = [rational_str(tr.kappa1_shifted),
                                rational_str(tr.kappa2_shifted)]
    return out


def _pv_json(pv) -> dict:
    return {"u": [z.to_json() for z in pv.u], "v": [z.to_json() for z in pv.v]}


# ---------------------------------------------------------------------
# check
# ---------------------------------------------------------------------

def cmd_check(args) -> int:
    op = _load_operator(args.file)
    report = Report(_digest(op.to_json()))
    requested = False

    if args.psd:
        requested = True
        report.run("psd", lambda: {"result": is_psd(op)})
    if args.pt_symmetric:
        requested = True
        report.run("pt_symmetric", lambda: {"result": is_pt_symmetric(op)})
    if args.bp_real:
        requested = True
        if op.field != "real" or (op.dim1, op.dim2) != (2, 2):
            raise InputError("--bp-real needs a real 2x2 (x) 2x2 operator")

        def run_bp():
            v = bp_real_2x2(op)
            out = {"result": v.holds,
                   "trace_condition": v.certificate_trace.trace_condition_holds}
            if v.certificate_trace.quartic is not None:
                out["quartic_trace"] = _trace_json(v.certificate_trace.quartic)
            if v.counterexample is not None:
                out["counterexample"] = _pv_json(v.counterexample)
            return out
        report.run("bp_real", run_bp)
    if args.bp_complex_numeric:
        requested = True

        def run_num():
            cfg = SearchConfig(restarts=args.restarts, seed=args.seed,
                               tolerance=args.tolerance)
            res = minimize_product_form(op, "complex", cfg)
            return {"result": res.verdict == "no_violation_found",
                    "search": res.to_json()}
        report.run("bp_complex_numeric", run_num)
    if args.decompose:
        requested = True
        if not is_pt_symmetric(op):
            raise InputError("--decompose needs a partial-transpose-symmetric operator")

        def run_dec():
            cert = decompose_pt_symmetric(op)
            if cert is None:
                return {"result": False, "certificate": None}
            return {"result": True, "certificate": cert.to_json()}
        report.run("decompose", run_dec)

    if not requested:
        raise InputError("no checks requested")
    report.emit()
    return 0 if report.holds() else 1


# ---------------------------------------------------------------------
# family
# ---------------------------------------------------------------------

def cmd_family(args) -> int:
    try:
        params = FamilyParams.of(args.a, args.b, args.c)
    except ValueError as e:
        raise InputError(str(e)) from e
    digest = _digest({"a": params.a.to_json(), "b": params.b.to_json(),
                      "c": params.c.to_json()})
    report = Report(digest)
    report.verdicts["preconditions"] = {"case_a": is_case_a(params),
                                        "case_b": is_case_b(params)}
    requested = False
    if args.general:
        requested = True
        report.run("bp_general", lambda: {"result": bp_family_general(params)})
    if args.case_a:
        requested = True
        if is_case_a(params):
            report.run("bp_case_a", lambda: {"result": bp_family_case_a(params)})
        else:
            report.verdicts["bp_case_a"] = {
                "result": None, "error": "precondition |a| = |c| fails"}
    if args.case_b:
        requested = True
        if is_case_b(params):
            report.run("bp_case_b", lambda: {"result": bp_family_case_b(params)})
        else:
            report.verdicts["bp_case_b"] = {
                "result": None, "error": "precondition a = r*c (r real) fails"}
    if args.psd:
        requested = True
        report.run("psd", lambda: {"result": psd_family(params)})
    if not requested:
        raise InputError("no checks requested")
    report.emit()
    return 1 if report.any_false() else 0


# ---------------------------------------------------------------------
# quartic
# ---------------------------------------------------------------------

def cmd_quartic(args) -> int:
    try:
        cs = QuarticCoeffs.of(*(as_rational(x) for x in
                                (args.c4, args.c3, args.c2, args.c1, args.c0)))
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad coefficient: {e}") from e
    report = Report(_digest([rational_str(c) for c in
                             (cs.c4, cs.c3, cs.c2, cs.c1, cs.c0)]))
    tr = quartic_nonneg_with_trace(cs)
    inv = quartic_invariants(cs)
    oracle = poly_nonneg_on_reals(cs.poly())
    report.verdicts["closed_form"] = {"result": tr.nonnegative,
                                      "trace": _trace_json(tr)}
    report.verdicts["invariants"] = {
        "sigma1": rational_str(inv.sigma1), "sigma2": rational_str(inv.sigma2),
        "sigma3": rational_str(inv.sigma3),
        "kappa0": rational_str(inv.kappa0), "kappa1": rational_str(inv.kappa1),
        "kappa2": rational_str(inv.kappa2), "kappa3": rational_str(inv.kappa3)}
    report.verdicts["root_oracle"] = {"result": oracle}
    report.emit()
    if oracle != tr.nonnegative:
        print("internal inconsistency: closed form disagrees with root oracle",
              file=sys.stderr)
        return 3
    return 0 if tr.nonnegative else 1


# ---------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------

def _axis(text: str):
    if ":" in text:
        lo, hi = text.split(":", 1)
        return (as_rational(lo), as_rational(hi))
    return as_rational(text)


def cmd_scan(args) -> int:
    try:
        spec = GridSpec(_axis(args.a), _axis(args.b), _axis(args.c),
                        as_rational(args.step))
        points = region_scan(spec)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(str(e)) from e
    csv_text = region_scan_csv(points)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(csv_text)
        except OSError as e:
            raise InputError(f"cannot write {args.out}: {e}") from e
    else:
        sys.stdout.write(csv_text)
    n_psd = sum(1 for p in points if p.psd)
    n_bp = sum(1 for p in points if p.block_positive)
    n_bp_only = sum(1 for p in points if p.block_positive and not p.psd)
    n_neither = sum(1 for p in points if not p.block_positive)
    violations = sum(1 for p in points if p.psd and not p.block_positive)
    report = Report(_digest({"a": str(args.a), "b": str(args.b),
                             "c": str(args.c), "step": str(args.step)}))
    report.verdicts["summary"] = {
        "result": violations == 0,
        "points": len(points), "psd": n_psd, "block_positive": n_bp,
        "bp_only": n_bp_only, "neither": n_neither,
        "psd_not_bp_violations": violations,
        "out": args.out or None}
    report.emit()
    return 0 if violations == 0 else 1


# ---------------------------------------------------------------------
# witness
# ---------------------------------------------------------------------

def cmd_witness(args) -> int:
    w = _load_operator(args.witness_file)
    rho = _load_operator(args.state_file)
    report = Report(_digest({"W": w.to_json(), "rho": rho.to_json()}))

    def run():
        try:
            value = witness_expectation(w, rho)
        except ValueError as e:
            raise InputError(str(e)) from e
        out = {"value": rational_str(value), "entangled_detected": value < 0}
        bp_known = None
        if w.field == "real" and (w.dim1, w.dim2) == (2, 2):
            bp_known = bp_real_2x2(w).holds
            out["witness_block_positive_real"] = bp_known
        res = minimize_product_form(w, "complex",
                                    SearchConfig(restarts=16, seed=args.seed))
        out["witness_complex_search"] = res.to_json()
        numeric_ok = res.verdict == "no_violation_found"
        if not (bp_known or (bp_known is None and numeric_ok)):
            out["warning"] = ("witness is not verified block positive; "
                              "a negative value does not imply entanglement")
        out["result"] = True
        return out

    report.run("witness", run)
    report.emit()
    return 0


# ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="blockpos",
        description="Exact block positivity, SOS and quartic nonnegativity deciders")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run deciders on an operator JSON file")
    c.add_argument("file")
    c.add_argument("--psd", action="store_true")
    c.add_argument("--bp-real", action="store_true")
    c.add_argument("--bp-complex-numeric", action="store_true")
    c.add_argument("--decompose", action="store_true")
    c.add_argument("--pt-symmetric", action="store_true")
    c.add_argument("--restarts", type=int, default=32)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--tolerance", type=float, default=1e-7)
    c.set_defaults(fn=cmd_check)

    f = sub.add_parser("family", help="closed-form family conditions for F(a,b,c)")
    f.add_argument("a")
    f.add_argument("b")
    f.add_argument("c")
    f.add_argument("--general", action="store_true")
    f.add_argument("--case-a", action="store_true")
    f.add_argument("--case-b", action="store_true")
    f.add_argument("--psd", action="store_true")
    f.set_defaults(fn=cmd_family)

    q = sub.add_parser("quartic", help="degree-4 nonnegativity over R")
    for name in ("c4", "c3", "c2", "c1", "c0"):
        q.add_argument(name)
    q.set_defaults(fn=cmd_quartic)

    s = sub.add_parser("scan", help="scan (a,b,c) region, emit CSV")
    s.add_argument("--a", default="-1:1", help="value or lo:hi range")
    s.add_argument("--b", default="-1:1")
    s.add_argument("--c", default="-1:1")
    s.add_argument("--step", default="1/50")
    s.add_argument("--out", default=None, help="CSV output path (default stdout)")
    s.set_defaults(fn=cmd_scan)

    wit = sub.add_parser("witness", help="exact Tr(W rho) with detection flag")
    wit.add_argument("witness_file")
    wit.add_argument("state_file")
    wit.add_argument("--seed", type=int, default=0)
    wit.set_defaults(fn=cmd_witness)
    return ap


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
