"""Command-line front end.

Every command validates its numeric domain before computing.  Exit codes:
0 for success or a congruence that holds, 1 for a congruence check that
fails, 2 for domain or hypothesis errors (including usage errors).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import local_modules as lm
from . import selmer
from . import sweeps
from .bernoulli import (
    bernoulli,
    bk_over_k,
    default_cache,
    denominator_formula,
    format_rational,
    zeta_ratio_check,
)
from .errors import DomainError, ResourceLimitExceeded

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_DOMAIN = 2


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    common.add_argument(
        "--cache", metavar="PATH", help="write the Bernoulli cache as a JSON map {k: 'num/den'}"
    )

    parser = argparse.ArgumentParser(
        prog="kummer",
        description="Exact congruence arithmetic: Bernoulli valuations, Selmer orders, "
        "torsion-module congruences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", parents=[common], help="exact Bernoulli number")
    p.add_argument("k", type=int)

    p = sub.add_parser("bk-over-k", parents=[common], help="reduced fraction B_k/k")
    p.add_argument("k", type=int)

    p = sub.add_parser(
        "denominator", parents=[common], help="closed-form denominator of B_k/k"
    )
    p.add_argument("k", type=int)

    p = sub.add_parser(
        "h0-order", parents=[common], help="fixed-part order for twist k (global, or at --p)"
    )
    p.add_argument("k", type=int)
    p.add_argument("--p", type=int, default=None, help="restrict to one prime")

    p = sub.add_parser(
        "selmer-order", parents=[common], help="odd part of the Selmer order for twist k"
    )
    p.add_argument("k", type=int)

    p = sub.add_parser(
        "selmer-at", parents=[common], help="ell-primary Selmer order for twist k"
    )
    p.add_argument("k", type=int)
    p.add_argument("--ell", type=int, required=True)

    for name, help_text in [
        ("check-kummer", "classical Kummer congruence between B_k/k and B_kp/kp"),
        ("check-theorem2", "congruence of the two ell-power Selmer orders"),
        ("chi-congruent", "are the k-th and kp-th character powers congruent mod ell^n"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--ell", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--kp", type=int, required=True)

    p = sub.add_parser(
        "hecke-congruent", parents=[common], help="componentwise congruence of weight pairs"
    )
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--kp", type=int, required=True)
    p.add_argument("--jp", type=int, required=True)

    p = sub.add_parser(
        "module-congruence", parents=[common], help="congruence of two torsion modules"
    )
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--kind", choices=("alg", "num", "car"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m1", required=True, help="partition, e.g. 4+2+1 (0 = zero module)")
    p.add_argument("--m2", required=True)
    p.add_argument("--e", type=int, default=1, help="ramification index")
    p.add_argument("--f", type=int, default=1, help="residue degree")

    p = sub.add_parser(
        "scan-irregular", parents=[common], help="scan for irregular pairs up to a bound"
    )
    p.add_argument("--ell-max", type=int, required=True)

    p = sub.add_parser("sweep", parents=[common], help="run the invariant sweep suites")
    p.add_argument("--suite", choices=sweeps.SUITES + ("all",), default="all")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-exponent", type=int, default=5)
    p.add_argument("--max-parts", type=int, default=4)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--ell-max", type=int, default=50)
    p.add_argument("--k-max", type=int, default=400)

    p = sub.add_parser(
        "zeta-check", parents=[common], help="zeta special value against |B_k/k|"
    )
    p.add_argument("k", type=int)
    p.add_argument("--tol", type=float, default=1e-9)

    return parser


def _print_value(args, payload: dict, text: str) -> int:
    print(_dump_json(payload) if args.json else text)
    return EXIT_OK


def _print_verdict(args, verdict: lm.CongruenceVerdict) -> int:
    if args.json:
        print(_dump_json(verdict.to_json_dict()))
    else:
        word = "holds" if verdict.holds else "fails"
        op = "==" if verdict.holds else "!="
        print(f"{word}: {verdict.lhs} {op} {verdict.rhs} (mod {verdict.modulus})")
    return EXIT_OK if verdict.holds else EXIT_FAILED_CHECK


def _print_predicate(args, holds: bool, kind: str, lhs: str, rhs: str, modulus: int) -> int:
    if args.json:
        payload = {
            "kind": kind,
            "holds": holds,
            "hypotheses": [],
            "lhs": lhs,
            "rhs": rhs,
            "modulus": str(modulus),
        }
        print(_dump_json(payload))
    else:
        word, op = ("holds", "==") if holds else ("fails", "!=")
        print(f"{word}: {lhs} {op} {rhs} (mod {modulus})")
    return EXIT_OK if holds else EXIT_FAILED_CHECK


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "bernoulli":
        value = bernoulli(args.k)
        return _print_value(
            args, {"k": args.k, "value": format_rational(value)}, format_rational(value)
        )
    if cmd == "bk-over-k":
        value = bk_over_k(args.k)
        return _print_value(
            args, {"k": args.k, "value": format_rational(value)}, format_rational(value)
        )
    if cmd == "denominator":
        value = denominator_formula(args.k)
        return _print_value(args, {"k": args.k, "value": str(value)}, str(value))
    if cmd == "h0-order":
        if args.p is None:
            value = selmer.h0_global_order(args.k)
            payload = {"k": args.k, "value": str(value)}
        else:
            value = selmer.h0_local_order(args.k, args.p)
            payload = {"k": args.k, "p": args.p, "value": str(value)}
        return _print_value(args, payload, str(value))
    if cmd == "selmer-order":
        value = selmer.selmer_order_odd_part(args.k)
        return _print_value(args, {"k": args.k, "value": str(value)}, str(value))
    if cmd == "selmer-at":
        value = selmer.selmer_order_at(args.k, args.ell)
        return _print_value(
            args, {"k": args.k, "ell": args.ell, "value": str(value)}, str(value)
        )
    if cmd == "check-kummer":
        return _print_verdict(args, selmer.kummer_check(args.ell, args.n, args.k, args.kp))
    if cmd == "check-theorem2":
        return _print_verdict(args, selmer.theorem2_check(args.ell, args.n, args.k, args.kp))
    if cmd == "chi-congruent":
        holds = selmer.chi_power_congruent(args.ell, args.n, args.k, args.kp)
        modulus = selmer.exponent_modulus(args.ell, args.n)
        return _print_predicate(
            args, holds, "chi-power", str(args.k), str(args.kp), modulus
        )
    if cmd == "hecke-congruent":
        pair1 = selmer.HeckePair(args.k, args.j)
        pair2 = selmer.HeckePair(args.kp, args.jp)
        holds = selmer.hecke_pair_congruent(args.ell, args.n, pair1, pair2)
        modulus = selmer.exponent_modulus(args.ell, args.n)
        return _print_predicate(
            args,
            holds,
            "hecke-pair",
            f"({pair1.k},{pair1.j})",
            f"({pair2.k},{pair2.j})",
            modulus,
        )
    if cmd == "module-congruence":
        ring = lm.LocalRing(args.ell, args.e, args.f)
        m1 = lm.make_module(ring, lm.parse_partition(args.m1))
        m2 = lm.make_module(ring, lm.parse_partition(args.m2))
        checker = {
            "alg": lm.alg_congruent,
            "num": lm.num_congruent,
            "car": lm.car_congruent,
        }[args.kind]
        return _print_verdict(args, checker(m1, m2, args.n))
    if cmd == "scan-irregular":
        pairs = selmer.scan_irregular(args.ell_max)
        if args.json:
            print(
                _dump_json(
                    [{"ell": p.ell, "k": p.k, "valuation": p.valuation} for p in pairs]
                )
            )
        else:
            for p in pairs:
                print(f"{p.ell}\t{p.k}\t{p.valuation}")
        return EXIT_OK
    if cmd == "sweep":
        config = sweeps.SweepConfig(
            trials=args.trials,
            seed=args.seed,
            max_exponent=args.max_exponent,
            max_parts=args.max_parts,
            n_max=args.n_max,
            congruence_ell_max=args.ell_max,
            congruence_k_max=args.k_max,
        )
        chosen = sweeps.SUITES if args.suite == "all" else (args.suite,)
        reports = sweeps.run_suites(config, chosen)
        if args.json:
            print(_dump_json([r.to_json_dict() for r in reports]))
        else:
            for r in reports:
                print(r.render())
        return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED_CHECK
    if cmd == "zeta-check":
        verdict = zeta_ratio_check(args.k, args.tol)
        if args.json:
            payload = {
                "k": verdict.k,
                "holds": verdict.holds,
                "relative_error": repr(verdict.rel_error),
                "tolerance": repr(verdict.tol),
            }
            print(_dump_json(payload))
        else:
            word = "holds" if verdict.holds else "fails"
            print(f"{word}: relative error {verdict.rel_error:.3e} (tol {verdict.tol:.1e})")
        return EXIT_OK if verdict.holds else EXIT_FAILED_CHECK
    raise AssertionError(f"unhandled command {cmd}")


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_DOMAIN if exc.code not in (0, None) else EXIT_OK
    try:
        code = _dispatch(args)
    except (DomainError, ResourceLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if getattr(args, "cache", None):
        with open(args.cache, "w", encoding="utf-8") as handle:
            handle.write(_dump_json(default_cache().as_json_map()))
            handle.write("\n")
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
