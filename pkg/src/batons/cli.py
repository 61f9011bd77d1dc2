"""Command-line front end.

Subcommands: density | construct | verify | sweep | conjecture.
Each invocation prints one JSON document to stdout (CSV for sweeps, to a
file or stdout).  Rationals are serialized as reduced "p/q" strings and
periodic sets as "m:[x1,...]" literals, never as decimals, so output
survives round-trips without losing exactness.

Exit codes: 0 success, 1 usage or parse error, 2 resource limit,
3 verification or formula/oracle mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import gcd
from typing import Sequence

from .closedform import (
    CongruenceCase,
    ThreePointBaton,
    congruence_case,
    covering_density,
    free_density,
    packing_density,
)
from .constructions import construct
from .core import (
    Baton,
    BatonError,
    DensityReport,
    Method,
    PeriodicSet,
    ResourceLimitError,
    RoleKind,
    has_role,
    iter_canonical_batons,
    normalize,
    parse_periodic_literal,
    parse_set_literal,
)
from .oracle import oracle_density
from . import verify as checkers

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_LIMIT = 2
EXIT_MISMATCH = 3

_ROLE_ORDER = [
    RoleKind.PACKING,
    RoleKind.COVERING,
    RoleKind.FREE,
    RoleKind.BLOCKING,
    RoleKind.FREE_BOTH,
]
_STANDARD_ROLES = _ROLE_ORDER[:4]

_CLOSED_FORM = {
    RoleKind.PACKING: packing_density,
    RoleKind.COVERING: covering_density,
    RoleKind.BLOCKING: covering_density,
    RoleKind.FREE: free_density,
    RoleKind.FREE_BOTH: free_density,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse default exits with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _parse_roles(text: str) -> list[RoleKind]:
    roles = []
    for part in text.split(","):
        name = part.strip().lower()
        try:
            role = RoleKind(name)
        except ValueError:
            raise BatonError(
                f"unknown role {name!r}; choose from "
                + ",".join(r.value for r in _ROLE_ORDER)
            ) from None
        if role not in roles:
            roles.append(role)
    return sorted(roles, key=_ROLE_ORDER.index)


def _emit(document: dict) -> None:
    json.dump(document, sys.stdout, indent=2)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# density


def cmd_density(args: argparse.Namespace) -> int:
    raw = parse_set_literal(args.set)
    baton, offset, scale = normalize(raw)
    roles = _parse_roles(args.roles)
    method = args.method
    if method == "auto":
        method = "closed_form" if baton.size == 3 else "oracle"
    if method in ("closed_form", "both") and baton.size != 3:
        raise BatonError(
            f"closed_form needs a three-point set after normalization, "
            f"got {baton}"
        )

    densities: dict[RoleKind, Fraction] = {}
    witnesses: dict[RoleKind, PeriodicSet] = {}
    if method in ("closed_form", "both"):
        three = ThreePointBaton.from_baton(baton)
        for role in roles:
            densities[role] = _CLOSED_FORM[role](three)
            witnesses[role] = construct(three, role)
        core_method = Method.CLOSED_FORM
    if method in ("oracle", "both"):
        for role in roles:
            value, witness = oracle_density(baton, role, threads=args.threads)
            if method == "both":
                if value != densities[role]:
                    print(
                        f"mismatch for {role.value}: closed form {_fmt(densities[role])}"
                        f" vs oracle {_fmt(value)}",
                        file=sys.stderr,
                    )
                    return EXIT_MISMATCH
            else:
                densities[role] = value
                witnesses[role] = witness
        if method == "oracle":
            core_method = Method.ORACLE

    report = DensityReport(
        baton=baton,
        normalization=(offset, scale),
        densities=densities,
        method=core_method,
        witnesses=witnesses,
    )
    _emit(
        {
            "set": sorted(raw),
            "normalized": {
                "offset": offset,
                "scale": scale,
                "canonical": list(baton.elements),
            },
            "densities": {r.value: _fmt(report.densities[r]) for r in roles},
            "method": method,
            "witnesses": {r.value: str(report.witnesses[r]) for r in roles},
        }
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# construct


def cmd_construct(args: argparse.Namespace) -> int:
    three = ThreePointBaton(args.l1, args.l2)
    role = _parse_roles(args.role)[0]
    witness = construct(three, role)
    verified = has_role(witness, three.baton(), role)
    _emit(
        {
            "lambda1": args.l1,
            "lambda2": args.l2,
            "set": list(three.baton().elements),
            "role": role.value,
            "witness": str(witness),
            "density": _fmt(witness.density()),
            "verified": verified,
        }
    )
    return EXIT_OK if verified else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args: argparse.Namespace) -> int:
    periodic = parse_periodic_literal(args.periodic)
    raw = parse_set_literal(args.set)
    # Translation preserves every role, scaling does not: only re-anchor.
    low = min(raw)
    baton = Baton(tuple(sorted(v - low for v in raw)))
    role = _parse_roles(args.role)[0]
    holds = has_role(periodic, baton, role)

    checks: dict[str, bool] = {}
    if holds and baton.size == 3 and baton.canonical:
        three = ThreePointBaton.from_baton(baton)
        case = congruence_case(three)
        if role is RoleKind.PACKING:
            checks["packing_reflection_lemma"] = checkers.check_packing_reflection_lemma(
                periodic, baton
            )
            if case is CongruenceCase.MINUS_ONE:
                checks["packing_window_inequality"] = (
                    checkers.check_packing_window_inequality(periodic, three)
                )
                checks["window_dichotomy"] = checkers.check_window_dichotomy(
                    periodic, three, role
                )
        elif role is RoleKind.FREE and case is CongruenceCase.PLUS_ONE:
            checks["free_window_inequality"] = checkers.check_free_window_inequality(
                periodic, three
            )
            checks["window_dichotomy"] = checkers.check_window_dichotomy(
                periodic, three, role
            )

    _emit(
        {
            "periodic": str(periodic),
            "set": list(baton.elements),
            "role": role.value,
            "has_role": holds,
            "density": _fmt(periodic.density()),
            "checks": checks,
        }
    )
    return EXIT_OK if holds and all(checks.values()) else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# sweep

SWEEP_COLUMNS = [
    "lambda1",
    "lambda2",
    "case",
    "dp_formula",
    "dp_oracle",
    "dc_formula",
    "dc_oracle",
    "df_formula",
    "df_oracle",
    "all_match",
]


def _sweep_row(pair: tuple[int, int]) -> dict[str, str]:
    l1, l2 = pair
    three = ThreePointBaton(l1, l2)
    baton = three.baton()
    formula = {
        "dp": packing_density(three),
        "dc": covering_density(three),
        "df": free_density(three),
    }
    oracle = {
        "dp": oracle_density(baton, RoleKind.PACKING)[0],
        "dc": oracle_density(baton, RoleKind.COVERING)[0],
        "df": oracle_density(baton, RoleKind.FREE)[0],
    }
    match = all(formula[k] == oracle[k] for k in formula)
    row = {"lambda1": str(l1), "lambda2": str(l2), "case": congruence_case(three).value}
    for key in ("dp", "dc", "df"):
        row[f"{key}_formula"] = _fmt(formula[key])
        row[f"{key}_oracle"] = _fmt(oracle[key])
    row["all_match"] = "true" if match else "false"
    return row


def sweep_rows(l1_max: int, l2_max: int, threads: int = 1) -> list[dict[str, str]]:
    """Formula-vs-oracle comparison rows for all coprime pairs in range.

    Rows are sorted by (lambda1, lambda2) regardless of how many threads
    computed them, so output bytes never depend on parallelism.
    """
    pairs = [
        (l1, l2)
        for l1 in range(1, l1_max + 1)
        for l2 in range(1, l2_max + 1)
        if gcd(l1, l2) == 1
    ]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_sweep_row, pairs))
    else:
        rows = [_sweep_row(p) for p in pairs]
    return sorted(rows, key=lambda r: (int(r["lambda1"]), int(r["lambda2"])))


def write_sweep_csv(rows: list[dict[str, str]], stream) -> None:
    writer = csv.DictWriter(stream, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = sweep_rows(args.l1_max, args.l2_max, threads=args.threads)
    if args.output == "-":
        write_sweep_csv(rows, sys.stdout)
    else:
        with open(args.output, "w", newline="") as fh:
            write_sweep_csv(rows, fh)
    mismatches = sum(1 for r in rows if r["all_match"] != "true")
    if mismatches:
        print(f"{mismatches} mismatching pair(s)", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# conjecture

_COVERING_BOUNDS = {3: Fraction(2, 5), 4: Fraction(1, 3)}


def cmd_conjecture(args: argparse.Namespace) -> int:
    bound = _COVERING_BOUNDS[args.size]
    batons = list(iter_canonical_batons(args.size, args.diam_max))

    def covering_of(baton: Baton) -> Fraction:
        return oracle_density(baton, RoleKind.COVERING)[0]

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            values = list(pool.map(covering_of, batons))
    else:
        values = [covering_of(b) for b in batons]

    best = max(values)
    argmax = [list(b.elements) for b, v in zip(batons, values) if v == best]
    respected = best <= bound
    _emit(
        {
            "size": args.size,
            "diam_max": args.diam_max,
            "sets_checked": len(batons),
            "bound": _fmt(bound),
            "max_covering": _fmt(best),
            "argmax": argmax,
            "respected": respected,
        }
    )
    return EXIT_OK if respected else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> _Parser:
    parser = _Parser(prog="batons", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_density = sub.add_parser("density", help="densities of a finite integer set")
    p_density.add_argument("--set", required=True, help="set literal, e.g. 0,1,3")
    p_density.add_argument(
        "--roles",
        default="packing,covering,free,blocking",
        help="comma-separated roles (default: the four standard ones)",
    )
    p_density.add_argument(
        "--method",
        choices=["auto", "closed_form", "oracle", "both"],
        default="auto",
        help="auto = closed form for 3-point sets, oracle otherwise",
    )
    p_density.add_argument("--threads", type=int, default=1)
    p_density.set_defaults(func=cmd_density)

    p_construct = sub.add_parser("construct", help="emit an optimal periodic witness")
    p_construct.add_argument("--l1", type=int, required=True)
    p_construct.add_argument("--l2", type=int, required=True)
    p_construct.add_argument("--role", required=True)
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", help="check a periodic set against a role")
    p_verify.add_argument("--periodic", required=True, help="literal m:[x1,...]")
    p_verify.add_argument("--set", required=True, help="baton literal, e.g. 0,1,3")
    p_verify.add_argument("--role", required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="compare formulas against the oracle")
    p_sweep.add_argument("l1_max", type=int, nargs="?", default=14)
    p_sweep.add_argument("l2_max", type=int, nargs="?", default=14)
    p_sweep.add_argument("--output", default="-", help="CSV path ('-' for stdout)")
    p_sweep.add_argument("--threads", type=int, default=1)
    p_sweep.set_defaults(func=cmd_sweep)

    p_conj = sub.add_parser("conjecture", help="scan covering densities for a bound")
    p_conj.add_argument("--size", type=int, choices=[3, 4], required=True)
    p_conj.add_argument("--diam-max", type=int, required=True)
    p_conj.add_argument("--threads", type=int, default=1)
    p_conj.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except BatonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except AssertionError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
