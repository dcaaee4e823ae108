"""Command-line interface: statistics, enumeration, expansions, verification.

Output is UTF-8; ``--format json`` emits newline-delimited JSON objects.
Exit codes: 0 success, 2 parse error, 3 resource bound exceeded, 4 the two
expansion routes disagree, 5 a verification failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import descent, parking, ribbon, symfunc, tanisaki
from .core import check_partition, check_permutation, conjugate, multinomial, n_stat, partitions

ENV_BOUND = "GPDESCENT_N_BOUND"
ENUM_BOUND = 7
LINALG_BOUND = 6

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BOUND = 3
EXIT_DISAGREE = 4
EXIT_VERIFY = 5


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part != "")
    except ValueError as exc:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from exc


def default_bound(fallback: int) -> int:
    value = os.environ.get(ENV_BOUND)
    if value is not None:
        return int(value)
    return fallback


def cmd_stats(args) -> int:
    sigma = check_permutation(parse_ints(args.sigma))
    payload = {
        "sigma": list(sigma),
        "inv": descent.inv(sigma),
        "maj": descent.maj(sigma),
        "Des": sorted(descent.descent_set(sigma)),
        "Inv": sorted(descent.inversion_set(sigma)),
        "invt": list(descent.invt(sigma)),
        "majt": list(descent.majt(sigma)),
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    lam = check_partition(parse_ints(args.partition))
    bound = args.n_bound if args.n_bound is not None else default_bound(ENUM_BOUND)
    if sum(lam) > bound:
        print(f"error: n = {sum(lam)} exceeds bound {bound}", file=sys.stderr)
        return EXIT_BOUND
    emit = (lambda obj: print(json.dumps(obj))) if args.format == "json" else (
        lambda obj: print(obj)
    )
    count = 0
    if args.kind == "D":
        for a in descent.descent_compositions_lambda(lam):
            emit({"composition": list(a)} if args.format == "json" else list(a))
            count += 1
    elif args.kind == "Jmaj":
        for sigma in sorted(descent.j_maj(lam)):
            emit(
                {"word": list(sigma), "maj": descent.maj(sigma)}
                if args.format == "json"
                else list(sigma)
            )
            count += 1
    elif args.kind == "R0":
        for tup in ribbon.minimal_ribbon_tuples(lam):
            emit(
                ribbon.to_json_dict(tup)
                if args.format == "json"
                else ribbon.render(tup) + "\n"
            )
            count += 1
    elif args.kind == "PF0":
        alpha = tuple(reversed(lam))
        for pf in parking.minimal_parking_functions(alpha):
            emit(
                parking.to_json_dict(pf)
                if args.format == "json"
                else parking.render(pf) + "\n"
            )
            count += 1
    summary = {"count": count, "multinomial": multinomial(lam)}
    print(json.dumps(summary) if args.format == "json" else f"count: {count} (multinomial {summary['multinomial']})")
    return EXIT_OK


def _print_expansion(expansion, fmt: str) -> None:
    if fmt == "json":
        for item in symfunc.expansion_json(expansion):
            print(json.dumps(item))
    else:
        for line in symfunc.expansion_lines(expansion):
            print(line)


def cmd_hall_littlewood(args) -> int:
    lam = check_partition(parse_ints(args.partition))
    bound = args.n_bound if args.n_bound is not None else default_bound(ENUM_BOUND)
    if sum(lam) > bound:
        print(f"error: n = {sum(lam)} exceeds bound {bound}", file=sys.stderr)
        return EXIT_BOUND
    routes = {}
    if args.route in ("descents", "both"):
        routes["descents"] = (
            symfunc.hall_littlewood_omega_by_descents(lam)
            if args.twisted
            else symfunc.hall_littlewood_by_descents(lam)
        )
    if args.route in ("ribbons", "both"):
        routes["ribbons"] = symfunc.hall_littlewood_by_ribbons(
            conjugate(lam), twisted=args.twisted
        )
    for name, expansion in routes.items():
        if args.route == "both":
            print(f"# route: {name}")
        _print_expansion(expansion, args.format)
    if args.route == "both":
        diff = symfunc.expansion_diff(routes["descents"], routes["ribbons"])
        if diff:
            print(f"error: routes disagree on {len(diff)} coefficients", file=sys.stderr)
            for mu, (a, b) in diff.items():
                print(f"  m[{','.join(map(str, mu))}]: {a} vs {b}", file=sys.stderr)
            return EXIT_DISAGREE
        print("# routes agree")
    return EXIT_OK


def cmd_verify(args) -> int:
    lam = check_partition(parse_ints(args.partition))
    bound = args.n_bound if args.n_bound is not None else default_bound(LINALG_BOUND)
    checks = args.checks.split(",") if args.checks else [
        "basis",
        "leading",
        "parabolic",
        "phi",
        "minimal-ribbons",
    ]
    results = {}
    document = {"lambda": list(lam)}
    try:
        if "basis" in checks:
            report = tanisaki.verify_descent_basis(lam, bound=bound)
            results["basis"] = report.basis_ok
            document.update(report.to_json_dict())
        if "leading" in checks:
            results["leading"] = tanisaki.verify_leading_terms(lam, bound=bound)
            document["leading_terms_ok"] = results["leading"]
        if "parabolic" in checks:
            ok = True
            cases = []
            for mu in partitions(sum(lam)):
                report = tanisaki.verify_parabolic_basis(lam, mu, bound=bound)
                cases.append(report.to_json_dict())
                ok = ok and report.ok
            results["parabolic"] = ok
            document["parabolic"] = cases
        if "phi" in checks:
            # the splitting-map check has its own smaller default bound;
            # skip it quietly when it was only implied by the default set
            phi_bound = args.n_bound if args.n_bound is not None else tanisaki.PHI_BOUND
            if sum(lam) > phi_bound and args.checks is None:
                document["phi_injective_ok"] = "skipped"
            else:
                results["phi"] = tanisaki.verify_phi_injective(lam, bound=phi_bound)
                document["phi_injective_ok"] = results["phi"]
        if "minimal-ribbons" in checks:
            tuples = list(ribbon.ribbon_tuples(lam))
            values = [ribbon.dinv(t) + ribbon.doff(t) for t in tuples]
            argmin = {t for t, v in zip(tuples, values) if v == min(values)}
            structural = set(ribbon.minimal_ribbon_tuples(lam))
            ok = (
                min(values) == n_stat(lam)
                and argmin == structural
                and len(structural) == multinomial(lam)
            )
            results["minimal-ribbons"] = ok
            document["minimal_ribbons_ok"] = ok
    except tanisaki.ResourceBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    document["checks"] = results
    print(json.dumps(document))
    if not all(results.values()):
        for name, ok in results.items():
            if not ok:
                print(f"verification failed: {name}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _add_shared_flags(parser: argparse.ArgumentParser, top_level: bool) -> None:
    """The shared flags are accepted both before and after the subcommand.

    Subcommand copies default to SUPPRESS so that leaving a trailing flag
    unset does not clobber a value given up front (subparsers merge their
    namespace over the top-level one).
    """
    default = (lambda value: value) if top_level else (lambda value: argparse.SUPPRESS)
    parser.add_argument(
        "--format", choices=("json", "table"), default=default("json")
    )
    parser.add_argument(
        "--n-bound",
        type=int,
        default=default(None),
        help=f"size guard (default {LINALG_BOUND} for linear algebra, "
        f"{ENUM_BOUND} for enumeration; env {ENV_BOUND} overrides)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpdescent",
        description="descent bases, parking functions, ribbon tuples, and "
        "Hall-Littlewood monomial expansions, exactly",
    )
    _add_shared_flags(parser, top_level=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="permutation statistics")
    p_stats.add_argument("sigma", help="one-line permutation, e.g. 3,5,1,2,4")
    p_stats.set_defaults(func=cmd_stats)

    p_enum = sub.add_parser("enumerate", help="stream an enumerated family")
    p_enum.add_argument("kind", choices=("D", "Jmaj", "R0", "PF0"))
    p_enum.add_argument("partition", help="comma-separated partition, e.g. 3,1")
    p_enum.set_defaults(func=cmd_enumerate)

    p_hl = sub.add_parser("hall-littlewood", help="monomial expansion")
    p_hl.add_argument("partition")
    p_hl.add_argument("--route", choices=("descents", "ribbons", "both"), default="both")
    p_hl.add_argument("--twisted", action="store_true")
    p_hl.set_defaults(func=cmd_hall_littlewood)

    p_verify = sub.add_parser(
        "verify",
        help="verify the descent basis indexed by LAMBDA inside the module "
        "of the conjugate shape",
    )
    p_verify.add_argument("partition")
    p_verify.add_argument(
        "--checks",
        default=None,
        help="comma-separated subset of basis,leading,parabolic,phi,minimal-ribbons",
    )
    p_verify.set_defaults(func=cmd_verify)

    for subparser in (p_stats, p_enum, p_hl, p_verify):
        _add_shared_flags(subparser, top_level=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except tanisaki.ResourceBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
