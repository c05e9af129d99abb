"""Command-line driver for field constructions, sweeps, and verifications.

Exit codes: 0 when every check passes, 1 when at least one check fails,
2 on usage or parameter errors. JSON output is byte-stable for identical
arguments; human output is fixed-width ASCII.
"""

from __future__ import annotations

import argparse
import json
import sys

from .gfext import FieldParams, make_field
from .identities import (
    VerificationReport,
    verify_field_suite,
    verify_wilson_prime,
    verify_wolstenholme_classical,
)
from .modnum import prime_powers_up_to, primes_up_to
from .symmetric import esp_all_product, esp_naive, predicted_sk

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gfwilson",
        description="Verify unit-product identities over finite fields GF(p^n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the full identity suite on one field")
    verify.add_argument("--p", type=int, required=True, help="field characteristic")
    verify.add_argument("--n", type=int, default=1, help="extension degree (default 1)")
    verify.add_argument("--json", action="store_true", help="emit a JSON report")
    verify.add_argument(
        "--strategy",
        choices=("product", "naive", "both"),
        default="product",
        help="engine for the symmetric values (default product)",
    )
    verify.set_defaults(func=_cmd_verify)

    table = sub.add_parser("table", help="print the s_k profile of one field")
    table.add_argument("--p", type=int, required=True)
    table.add_argument("--n", type=int, default=1)
    table.add_argument("--json", action="store_true")
    table.add_argument(
        "--strategy", choices=("product", "naive", "both"), default="product"
    )
    table.set_defaults(func=_cmd_table)

    sweep = sub.add_parser("sweep", help="verify every prime power 3 <= q <= max-q")
    sweep.add_argument("--max-q", type=int, required=True, dest="max_q")
    sweep.add_argument("--json", action="store_true")
    sweep.set_defaults(func=_cmd_sweep)

    wilson = sub.add_parser("wilson", help="check (p-1)! = -1 mod p for primes <= max-p")
    wilson.add_argument("--max-p", type=int, required=True, dest="max_p")
    wilson.add_argument("--json", action="store_true")
    wilson.set_defaults(func=_cmd_wilson)

    wol = sub.add_parser(
        "wolstenholme",
        help="check sum (p-1)!/k = 0 mod p^2 for primes 5 <= p <= max-p",
    )
    wol.add_argument("--max-p", type=int, required=True, dest="max_p")
    wol.add_argument("--json", action="store_true")
    wol.add_argument(
        "--allow-negative-control",
        action="store_true",
        help="include p = 3, which is expected to fail",
    )
    wol.set_defaults(func=_cmd_wolstenholme)

    return parser


def _field_report_dict(field: FieldParams, report: VerificationReport) -> dict:
    return {
        "schema": 1,
        "subject": str(field),
        "p": field.p,
        "n": field.n,
        "q": field.q,
        "modulus": list(field.modulus.coeffs),
        "checks": [c.as_json_dict() for c in report.checks],
        "all_pass": report.all_pass,
    }


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _print_field_report(field: FieldParams, report: VerificationReport) -> None:
    print(f"{field}  q={field.q}  modulus {field.modulus}")
    by_name: dict[str, list] = {}
    for c in report.checks:
        by_name.setdefault(c.name, []).append(c)
    for name, checks in by_name.items():
        good = sum(c.passed for c in checks)
        print(f"  {name:<20} {good:>5}/{len(checks)} pass")
    for c in report.checks:
        if not c.passed:
            print(f"  FAIL {c.name} {c.params}: expected {c.expected}, got {c.actual}")
    print(f"{'PASS' if report.all_pass else 'FAIL'} ({len(report.checks)} checks)")


def _cmd_verify(args) -> int:
    field = make_field(args.p, args.n)
    report = verify_field_suite(field, strategy=args.strategy)
    if args.json:
        _print_json(_field_report_dict(field, report))
    else:
        _print_field_report(field, report)
    return 0 if report.all_pass else 1


def _cmd_table(args) -> int:
    field = make_field(args.p, args.n)
    if args.strategy == "naive":
        values = [esp_naive(field, k) for k in range(1, field.q)]
    else:
        values = list(esp_all_product(field).values)
    rows = []
    for k in range(1, field.q):
        s_k = values[k - 1]
        pred = predicted_sk(field, k)
        rows.append((k, s_k, pred, s_k == pred))
    all_match = all(r[3] for r in rows)
    if args.json:
        _print_json(
            {
                "schema": 1,
                "subject": str(field),
                "p": field.p,
                "n": field.n,
                "q": field.q,
                "modulus": list(field.modulus.coeffs),
                "rows": [
                    {
                        "k": k,
                        "s_k": s_k.encoding,
                        "coeffs": list(s_k.coeffs),
                        "predicted": pred.encoding,
                        "match": match,
                    }
                    for k, s_k, pred, match in rows
                ],
                "all_match": all_match,
            }
        )
    else:
        print(f"{field}  q={field.q}  modulus {field.modulus}")
        width = max(1, len(str(field.q - 1)))
        cwidth = max(6, max(len(str(list(r[1].coeffs))) for r in rows))
        print(f"  {'k':>{width}}  {'s_k':>6}  {'coeffs':<{cwidth}}  {'predicted':>9}  match")
        for k, s_k, pred, match in rows:
            print(
                f"  {k:>{width}}  {s_k.encoding:>6}  {str(list(s_k.coeffs)):<{cwidth}}"
                f"  {pred.encoding:>9}  {'ok' if match else 'FAIL'}"
            )
        print("all rows match" if all_match else "MISMATCH")
    return 0 if all_match else 1


def _cmd_sweep(args) -> int:
    fields = [(q, p, n) for q, p, n in prime_powers_up_to(args.max_q) if q >= 3]
    if not fields:
        raise ValueError(f"empty sweep: no prime powers in [3, {args.max_q}]")
    reports = []
    for _, p, n in fields:
        field = make_field(p, n)
        reports.append((field, verify_field_suite(field)))
    if args.json:
        _print_json([_field_report_dict(f, r) for f, r in reports])
    else:
        for field, report in reports:
            status = "pass" if report.all_pass else "FAIL"
            print(
                f"{str(field):<12} q={field.q:<6} checks={len(report.checks):<6} {status}"
            )
        ok = sum(r.all_pass for _, r in reports)
        print(f"{ok}/{len(reports)} fields pass")
    return 0 if all(r.all_pass for _, r in reports) else 1


def _prime_checks_report(subject: str, max_p: int, checks) -> dict:
    return {
        "schema": 1,
        "subject": subject,
        "max_p": max_p,
        "checks": [c.as_json_dict() for c in checks],
        "all_pass": all(c.passed for c in checks),
    }


def _print_prime_checks(checks) -> None:
    for c in checks:
        status = "pass" if c.passed else "FAIL"
        print(f"p={c.params['p']:<6} expected={c.expected:<8} actual={c.actual:<8} {status}")
    ok = sum(c.passed for c in checks)
    print(f"{ok}/{len(checks)} primes pass")


def _cmd_wilson(args) -> int:
    if args.max_p < 3:
        raise ValueError(f"--max-p must be >= 3, got {args.max_p}")
    checks = [verify_wilson_prime(p) for p in primes_up_to(args.max_p) if p >= 3]
    if args.json:
        _print_json(_prime_checks_report("wilson", args.max_p, checks))
    else:
        _print_prime_checks(checks)
    return 0 if all(c.passed for c in checks) else 1


def _cmd_wolstenholme(args) -> int:
    primes = [p for p in primes_up_to(args.max_p) if p >= 5]
    if args.allow_negative_control and args.max_p >= 3:
        primes.insert(0, 3)
    if not primes:
        raise ValueError(
            f"empty run: no admissible primes up to {args.max_p}"
            " (p >= 5, or p = 3 with --allow-negative-control)"
        )
    checks = [
        verify_wolstenholme_classical(p, allow_negative_control=(p == 3))
        for p in primes
    ]
    if args.json:
        _print_json(_prime_checks_report("wolstenholme_classical", args.max_p, checks))
    else:
        _print_prime_checks(checks)
    return 0 if all(c.passed for c in checks) else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed a usage message; --help exits 0
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
