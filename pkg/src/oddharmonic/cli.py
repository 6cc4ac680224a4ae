"""Command-line front end: eval, verify, sweep, table, bounds, identity-check.

Exit codes: 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from fractions import Fraction

from . import hyper, primes
from .certificates import (
    TRIVIAL_INTEGER,
    decimal_bound_checks,
    verify_odd_noninteger,
    verify_star_noninteger,
)
from .sums import Composition, SumSpec, compositions, harmonic_sum

_X_DEFAULT = "1,1/2,1/3,2/5"

SUITES = ("powersum", "alt-powersum", "depth1", "chu", "blocks", "inversion", "all")


def _spec_from(args) -> SumSpec:
    return SumSpec(args.ordering, args.parity)


def _add_spec_flags(parser, default_parity="odd"):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--star", dest="ordering", action="store_const",
                       const="star", help="weakly increasing indices")
    group.add_argument("--strict", dest="ordering", action="store_const",
                       const="strict", help="strictly increasing indices (default)")
    parser.set_defaults(ordering="strict")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--odd", dest="parity", action="store_const",
                       const="odd", help="denominators 2k+1")
    group.add_argument("--standard", dest="parity", action="store_const",
                       const="standard", help="denominators k")
    parser.set_defaults(parity=default_parity)


def _cmd_eval(args) -> int:
    comp = Composition.parse(args.comp)
    value = harmonic_sum(_spec_from(args), args.n, comp)
    if args.format == "json":
        print(json.dumps({"value": str(value)}))
    else:
        print(value)
    return 0


def _cmd_verify(args) -> int:
    if args.parity == "standard":
        raise ValueError("verify covers odd sums only; drop --standard")
    comp = Composition.parse(args.comp)
    verifier = verify_star_noninteger if args.ordering == "star" else verify_odd_noninteger
    cert = verifier(args.n, comp)
    if args.format == "plain":
        print(f"{cert.kind} n={cert.n} comp={cert.composition} "
              f"prime={cert.prime} valuation={cert.valuation} bound={cert.bound}")
    else:
        print(json.dumps(cert.to_json()))
    if cert.kind == TRIVIAL_INTEGER and cert.n != 1:
        return 1
    return 0


def _cmd_sweep(args) -> int:
    verifier = verify_star_noninteger if args.ordering == "star" else verify_odd_noninteger
    depth_max = args.depth_max if args.depth_max is not None else args.weight_max
    failures = 0
    for n in range(args.n_min, args.n_max + 1):
        for comp_t in compositions(args.weight_max, depth_max):
            if len(comp_t) > n:
                continue
            try:
                cert = verifier(n, Composition(comp_t))
            except RuntimeError as exc:
                print(f"FAIL n={n} comp={','.join(map(str, comp_t))}: {exc}",
                      file=sys.stderr)
                failures += 1
                continue
            print(json.dumps(cert.to_json()))
    return 1 if failures else 0


def _cmd_table(args) -> int:
    reports = [primes.window_report(r, args.cap, args.run)
               for r in range(1, args.r_max + 1)]
    if args.format == "latex":
        print(r"\begin{tabular}{|c|" + "c|" * min(10, len(reports)) + "}")
        print(r"\hline")
        for start in range(0, len(reports), 10):
            chunk = reports[start : start + 10]
            print("$r$ & " + " & ".join(str(rep.r) for rep in chunk) + r" \\")
            print(r"\hline")
            print("$n_r$ & " + " & ".join(str(rep.threshold) for rep in chunk) + r" \\")
            print(r"\hline")
        print(r"\end{tabular}")
    else:
        print("r,max_nonmember,n_r")
        for rep in reports:
            print(f"{rep.r},{rep.max_nonmember},{rep.threshold}")
    return 0


def _cmd_bounds(args) -> int:
    checks = decimal_bound_checks(args.ones_max)
    all_ok = True
    if args.format == "plain":
        for c in checks:
            status = "OK" if c.ok else "FAIL"
            print(f"odd sum n={c.n} comp={','.join(map(str, c.composition))} "
                  f"< {c.threshold}: {status}")
            all_ok &= c.ok
    else:
        print("n,composition,threshold,ok,value")
        for c in checks:
            comp = " ".join(map(str, c.composition))
            print(f"{c.n},{comp},{c.threshold},{c.ok},{c.value}")
            all_ok &= c.ok
    return 0 if all_ok else 1


def _parse_x_list(text: str) -> list[Fraction]:
    return [Fraction(tok.strip()) for tok in text.split(",")]


def _identity_rows(suite, n_max, s_max, m_max, xs, seed, count):
    """Yield (suite, n, s, m, x, sign, lhs, rhs) rows for one suite."""
    if suite == "powersum":
        n_max, s_max = n_max or 20, s_max or 4
        for n in range(1, n_max + 1):
            for s in range(1, s_max + 1):
                for x in xs:
                    lhs, rhs = hyper.odd_power_sum_identity(n, s, x)
                    yield (suite, n, s, "", x, "", lhs, rhs)
    elif suite == "alt-powersum":
        n_max, s_max = n_max or 20, s_max or 4
        for n in range(1, n_max + 1):
            for s in range(1, s_max + 1):
                for x in xs:
                    lhs, rhs = hyper.alternating_odd_power_sum_identity(n, s, x)
                    yield (suite, n, s, "", x, "", lhs, rhs)
    elif suite == "depth1":
        n_max, s_max = n_max or 30, s_max or 5
        for n in range(1, n_max + 1):
            for s in range(1, s_max + 1):
                for sign in (1, -1):
                    yield (suite, n, s, "", "", sign,
                           hyper.odd_harmonic_via_hyper(n, s, sign),
                           hyper.odd_harmonic_direct(n, s, sign))
                    yield ("depth1-standard", n, s, "", "", sign,
                           hyper.harmonic_via_hyper(n, s, sign),
                           harmonic_sum(SumSpec("strict", "standard"), n,
                                        (s if sign == 1 else -s,)))
        for n in range(1, 51):
            yield ("closed-form", n, 1, "", "", "",
                   hyper.odd_harmonic_closed_form(n),
                   hyper.odd_harmonic_direct(n, 1))
            yield ("euler", n, 1, "", "", "",
                   hyper.euler_binomial_harmonic(n),
                   harmonic_sum(SumSpec("strict", "standard"), n, (1,)))
    elif suite == "chu":
        n_max, count = n_max or 10, count or 50
        rng = random.Random(seed)
        for _ in range(count):
            b = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            while True:
                c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                if not (c.denominator == 1 and c <= 0 and -c < n_max):
                    break
            for n in range(n_max + 1):
                lhs, rhs = hyper.chu_vandermonde(n, b, c)
                yield (suite, n, "", "", f"{b};{c}", "", lhs, rhs)
    elif suite == "blocks":
        n_max, m_max = n_max or 30, m_max or 8
        for m in range(1, m_max + 1):
            for n in range(1, n_max + 1):
                yield (suite, n, "", m, "", "",
                       hyper.consecutive_product_sum_via_hyper(m, n),
                       hyper.consecutive_product_sum(m, n))
        for n in range(1, n_max + 1):
            yield ("blocks-depth1", n, "", 1, "", "",
                   hyper.consecutive_product_sum(1, n),
                   hyper.odd_harmonic_direct(n, 1))
    elif suite == "inversion":
        n_max, s_max, m_max = n_max or 15, min(s_max or 3, 3), m_max or 5
        half, threehalf = Fraction(1, 2), Fraction(3, 2)
        for s in range(1, s_max + 1):
            for sign in (1, -1):
                for n in range(1, n_max + 1):
                    lhs = hyper.pfq((half,) * s + (1 - n,), (threehalf,) * s, sign)
                    rhs = hyper.alternating_binomial_sum(
                        n, lambda k: hyper.odd_harmonic_direct(k, s, sign))
                    yield (suite, n, s, "", "", sign, lhs, rhs)
        for m in range(1, m_max + 1):
            for n in range(1, n_max + 1):
                lhs = hyper.pfq((1, 1 - n), (m + n,), -1)
                rhs = (math.factorial(m - 1) * (m + n - 1)
                       * hyper.alternating_binomial_sum(
                           n, lambda k: hyper.consecutive_product_sum(m, k)))
                yield ("inversion-blocks", n, "", m, "", "", lhs, rhs)
        rng = random.Random(seed)
        f = [Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(8)]
        back = hyper.binomial_transform(hyper.binomial_inversion(f))
        for i, (a, b) in enumerate(zip(f, back), start=1):
            yield ("inversion-roundtrip", i, "", "", "", "", a, b)
    else:
        raise ValueError(f"unknown identity suite {suite!r}")


def _cmd_identity(args) -> int:
    xs = _parse_x_list(args.x_list)
    suites = [s for s in SUITES if s != "all"] if args.suite == "all" else [args.suite]
    print("suite,n,s,m,x,sign,lhs,rhs,equal")
    all_equal = True
    for suite in suites:
        for row in _identity_rows(suite, args.n_max, args.s_max, args.m_max,
                                  xs, args.seed, args.count):
            name, n, s, m, x, sign, lhs, rhs = row
            equal = lhs == rhs
            all_equal &= equal
            print(f"{name},{n},{s},{m},{x},{sign},{lhs},{rhs},{equal}")
    return 0 if all_equal else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddharmonic",
        description="Exact multiple harmonic sums, non-integrality "
                    "certificates, prime-window tables, and hypergeometric "
                    "identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one sum exactly")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--comp", required=True, help='composition, e.g. "1,2,-3"')
    _add_spec_flags(p)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("verify", help="emit a non-integrality certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--comp", required=True)
    _add_spec_flags(p)
    p.add_argument("--format", choices=("plain", "json"), default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="verify a grid of n and compositions")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--weight-max", type=int, required=True)
    p.add_argument("--depth-max", type=int, default=None)
    _add_spec_flags(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("table", help="prime-window threshold table")
    p.add_argument("which", choices=("nr",))
    p.add_argument("--r-max", type=int, default=20)
    p.add_argument("--cap", type=int, default=20000)
    p.add_argument("--run", type=int, default=2000)
    p.add_argument("--format", choices=("csv", "latex"), default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("bounds", help="check the decimal reference bounds exactly")
    p.add_argument("--ones-max", type=int, default=10,
                   help="deepest all-ones reference sum to check (4..10)")
    p.add_argument("--format", choices=("csv", "plain"), default="csv")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("identity-check", help="run an identity suite as CSV")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--s-max", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--x-list", default=_X_DEFAULT)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=None)
    p.set_defaults(func=_cmd_identity)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
