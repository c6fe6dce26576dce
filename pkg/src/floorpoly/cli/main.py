"""``floorpoly`` command line.

Exit codes: 0 answered, 2 search budget exhausted (Unknown), 1 usage error,
malformed input or failed verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from ..analysis import (
    Budget,
    VerdictKind,
    classify_complete,
    classify_ud,
    find_incomplete_prime_even,
    find_incomplete_prime_monomial,
    find_incomplete_prime_scan,
    find_residue_run,
    verify_certificate,
)
from ..analysis.certificates import Verdict
from ..distribution import (
    MAX_PERIOD,
    empirical_histogram,
    exact_histogram,
    weyl_from_histogram,
)
from ..errors import FloorPolyError, SearchExhausted
from .expr import parse_poly

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(sp, poly=True, modulus=False):
    if poly:
        sp.add_argument("-P", "--poly", required=True, help='polynomial, e.g. "1/2*x^2 + sqrt(2)"')
    if modulus:
        sp.add_argument("-m", "--modulus", type=int, required=True)
    sp.add_argument("--budget-prime", type=int, default=10**5, help="largest prime tried")
    sp.add_argument("--budget-anchor", type=int, default=10**4, help="largest anchor a tried")
    sp.add_argument("--budget-period", type=int, default=MAX_PERIOD, help="longest scan")
    sp.add_argument("--csv", action="store_true", help="emit CSV instead of JSON")
    sp.add_argument(
        "--seed", type=int, default=None, help="seed for randomized diagnostics (all current commands are deterministic)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="floorpoly", description="Residues of floor(P(k)) modulo integers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("dist", help="residue histogram of floor(P(k)) mod m")
    _add_common(sp, modulus=True)
    sp.add_argument("-N", "--samples", type=int, default=10**5, help="samples when P has no finite period")

    sp = sub.add_parser("udcheck", help="is floor(P(k)) u.d. mod m (exact, one period)")
    _add_common(sp, modulus=True)

    sp = sub.add_parser("complete", help="is P complete mod m (exact, one period)")
    _add_common(sp, modulus=True)

    sp = sub.add_parser("classify", help="u.d. in Z and completeness in Z verdicts")
    _add_common(sp)

    sp = sub.add_parser("witness-nonud", help="certificate that floor(P(k)) is not u.d. in Z")
    _add_common(sp)

    sp = sub.add_parser("witness-incomplete", help="certificate that P is not complete in Z")
    _add_common(sp)
    sp.add_argument("--method", choices=["auto", "even", "monomial", "scan"], default="auto")

    sp = sub.add_parser("run-search", help="l consecutive nth power non-residues mod a prime")
    _add_common(sp, poly=False)
    sp.add_argument("-n", "--power", type=int, required=True)
    sp.add_argument("-l", "--length", type=int, required=True)
    sp.add_argument("--p-min", type=int, default=2)

    sp = sub.add_parser("weyl", help="Weyl sums |1/N sum e(h floor(P(k))/m)|")
    _add_common(sp, modulus=True)
    sp.add_argument("-N", "--samples", type=int, default=10**5)
    sp.add_argument("--h", type=int, default=None, help="single frequency (default: all 1..m-1)")

    sp = sub.add_parser("verify", help="re-verify a certificate file")
    sp.add_argument("certificate", help="certificate JSON file")
    sp.add_argument("-P", "--poly", default=None)
    sp.add_argument("-n", "--power", type=int, default=None)
    sp.add_argument("-l", "--length", type=int, default=None)
    sp.add_argument("--budget-period", type=int, default=MAX_PERIOD)
    sp.add_argument("--csv", action="store_true")
    return parser


def _budget(args) -> Budget:
    return Budget(
        max_prime=args.budget_prime,
        max_anchor=args.budget_anchor,
        max_period=args.budget_period,
    )


def _rows_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _flat_csv(doc: dict) -> str:
    rows = []

    def walk(prefix, v):
        if isinstance(v, dict):
            for k, x in v.items():
                walk(f"{prefix}.{k}" if prefix else k, x)
        elif isinstance(v, list):
            rows.append((prefix, " ".join(map(str, v))))
        else:
            rows.append((prefix, "" if v is None else json.dumps(v) if isinstance(v, bool) else v))

    walk("", doc)
    return _rows_csv(("field", "value"), rows)


def _verdict_or_cert(v: Verdict) -> tuple[dict, int]:
    if v.certificate is not None:
        return v.certificate.to_json(), EXIT_OK
    return v.to_dict(), EXIT_UNKNOWN if v.is_unknown else EXIT_OK


def _cmd_dist(args):
    P = parse_poly(args.poly)
    if P.has_rational_nonconstant() and P.degree >= 0:
        hist = exact_histogram(P, args.modulus, args.budget_period)
    else:
        hist = empirical_histogram(P, args.modulus, args.samples, args.budget_period)
    doc = {"poly": str(P), **hist.to_dict()}
    return doc, EXIT_OK, hist.to_csv()


def _cmd_udcheck(args):
    P = parse_poly(args.poly)
    hist = exact_histogram(P, args.modulus, args.budget_period)
    share = hist.scanned // hist.m
    ud = all(c == share for c in hist.counts)
    doc = {"poly": str(P), "m": hist.m, "ud": ud, "period": hist.scanned, "counts": list(hist.counts)}
    return doc, EXIT_OK, hist.to_csv()


def _cmd_complete(args):
    P = parse_poly(args.poly)
    hist = exact_histogram(P, args.modulus, args.budget_period)
    missing = hist.missing
    doc = {
        "poly": str(P),
        "m": hist.m,
        "complete": not missing,
        "missing": missing,
        "period": hist.scanned,
    }
    return doc, EXIT_OK, hist.to_csv()


def _cmd_classify(args):
    P = parse_poly(args.poly)
    budget = _budget(args)
    ud, comp = classify_ud(P, budget), classify_complete(P, budget)
    doc = {"poly": str(P), "ud": ud.to_dict(), "complete": comp.to_dict()}
    code = EXIT_UNKNOWN if ud.is_unknown or comp.is_unknown else EXIT_OK
    return doc, code, None


def _cmd_witness_nonud(args):
    P = parse_poly(args.poly)
    doc, code = _verdict_or_cert(classify_ud(P, _budget(args)))
    return doc, code, None


def _unknown(reason, exc: SearchExhausted) -> Verdict:
    return Verdict(VerdictKind.UNKNOWN, reason, budget=dict(exc.budget))


def _cmd_witness_incomplete(args):
    P = parse_poly(args.poly)
    budget = _budget(args)
    if args.method == "auto":
        doc, code = _verdict_or_cert(classify_complete(P, budget))
        return doc, code, None
    try:
        if args.method == "even":
            cert = find_incomplete_prime_even(P, budget)
        elif args.method == "scan":
            cert = find_incomplete_prime_scan(P, budget)
        else:
            if any(not c.is_zero for c in P.coeffs[1:-1]):
                raise UsageError(f"{P} is not of the form a*x^n + c")
            cert = find_incomplete_prime_monomial(P.leading.q, P.degree, P.constant, budget)
    except SearchExhausted as exc:
        return _unknown(args.method, exc).to_dict(), EXIT_UNKNOWN, None
    return cert.to_json(), EXIT_OK, None


def _cmd_run_search(args):
    try:
        run = find_residue_run(args.power, args.length, args.p_min, _budget(args))
    except SearchExhausted as exc:
        return _unknown("residue_run", exc).to_dict(), EXIT_UNKNOWN, None
    return run.to_json(), EXIT_OK, None


def _cmd_weyl(args):
    P = parse_poly(args.poly)
    hist = empirical_histogram(P, args.modulus, args.samples, args.budget_period)
    hs = [args.h] if args.h is not None else range(1, args.modulus)
    stats = [weyl_from_histogram(hist, h) for h in hs]
    doc = {
        "poly": str(P),
        "m": args.modulus,
        "samples": args.samples,
        "sums": [{"h": s.h, "magnitude": s.magnitude} for s in stats],
        "max_magnitude": max(s.magnitude for s in stats),
    }
    text = _rows_csv(("h", "magnitude"), [(s.h, repr(s.magnitude)) for s in stats])
    return doc, EXIT_OK, text


def _cmd_verify(args):
    try:
        with open(args.certificate) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        return {"valid": False, "error": f"cannot read certificate: {exc}"}, EXIT_FAIL, None
    try:
        ok = verify_certificate(
            data, args.poly, n=args.power, l=args.length, max_period=args.budget_period
        )
    except FloorPolyError as exc:
        return {"valid": False, "error": str(exc)}, EXIT_FAIL, None
    doc = {"valid": ok, "type": data["type"]}
    return doc, EXIT_OK if ok else EXIT_FAIL, None


COMMANDS = {
    "dist": _cmd_dist,
    "udcheck": _cmd_udcheck,
    "complete": _cmd_complete,
    "classify": _cmd_classify,
    "witness-nonud": _cmd_witness_nonud,
    "witness-incomplete": _cmd_witness_incomplete,
    "run-search": _cmd_run_search,
    "weyl": _cmd_weyl,
    "verify": _cmd_verify,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        doc, code, text = COMMANDS[args.command](args)
    except UsageError as exc:
        stderr.write(f"floorpoly: {exc}\n")
        return EXIT_FAIL
    except (FloorPolyError, ValueError) as exc:
        stderr.write(f"floorpoly: {type(exc).__name__}: {exc}\n")
        return EXIT_FAIL
    if args.csv:
        stdout.write(text if text is not None else _flat_csv(doc))
    else:
        stdout.write(json.dumps(doc, indent=2) + "\n")
    return code


def main() -> None:
    sys.exit(run())
