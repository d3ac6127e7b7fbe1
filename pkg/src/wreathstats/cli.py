"""Command-line front end: statistics, bijection roundtrips, identity verification.

Exit codes: 0 success/pass, 1 mismatch or roundtrip/precondition failure,
2 usage or parse error.  Output is canonical JSON (sorted keys) or CSV and is
byte-stable across runs; timing is opt-in since it would break stability.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import bijections, identities
from .core import (
    ColoredPermutation,
    Composition,
    OrderSpec,
    col,
    des,
    inv,
    inverse,
    length,
    maj,
    order_from_json,
    parse_entries,
    random_positive_dominant,
)
from .sequences import (
    ColoredSequence,
    Partition,
    enumerate_compositions,
    seq_col,
)
from .series import TruncatedSeries

GUARD_LIMIT = 10**7


class UsageError(Exception):
    pass


class CheckFailure(Exception):
    pass


def resolve_order(selector: str, r: int, n: int) -> OrderSpec:
    if selector in ("ar", "bz", "st"):
        return OrderSpec(r, n, selector)
    if selector == "reiner":
        return OrderSpec.reiner(n)
    if selector.startswith("custom:"):
        path = selector.split(":", 1)[1]
        try:
            with open(path, "r", encoding="utf-8") as handle:
                return order_from_json(handle.read(), r, n)
        except OSError as exc:
            raise UsageError(f"cannot read order file {path}: {exc}") from exc
    if selector.startswith("random:"):
        return random_positive_dominant(r, n, int(selector.split(":", 1)[1]))
    raise UsageError(f"unknown order selector {selector!r}")


def _parse_window(text: str, r: int, n: int | None) -> ColoredPermutation:
    entries = parse_entries(text)
    if n is not None and len(entries) != n:
        raise UsageError(f"window has {len(entries)} entries, expected {n}")
    if any(e.color >= r for e in entries):
        raise UsageError(f"window color out of range for r = {r}")
    try:
        return ColoredPermutation.from_window(entries, r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_sequence(text: str, r: int, n: int | None) -> ColoredSequence:
    entries = parse_entries(text)
    if n is not None and len(entries) != n:
        raise UsageError(f"sequence has {len(entries)} entries, expected {n}")
    try:
        return ColoredSequence(r, entries)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_composition(text: str) -> Composition:
    try:
        return Composition(tuple(int(p) for p in text.split(",") if p != ""))
    except ValueError as exc:
        raise UsageError(f"bad composition {text!r}: {exc}") from exc


def _guard(r: int, n: int, force: bool) -> None:
    if r**n * math.factorial(n) > GUARD_LIMIT and not force:
        raise UsageError(
            f"group size {r}^{n} * {n}! exceeds {GUARD_LIMIT}; pass --force to override"
        )


def _emit(data: dict, args: argparse.Namespace) -> None:
    if args.format == "csv":
        lines = _flatten_csv(data)
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _flatten_csv(data: dict, prefix: str = "") -> list[str]:
    rows = []
    for key in sorted(data):
        value = data[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            rows.extend(_flatten_csv(value, prefix=f"{name}."))
        else:
            rows.append(f"{name},{value}")
    return rows


def _stats_block(order: OrderSpec, g: ColoredPermutation) -> dict:
    return {
        "window": str(g),
        "des": des(order, g),
        "maj": maj(order, g),
        "inv": inv(order, g),
        "len": length(order, g),
        "col": col(g),
    }


def cmd_stats(args: argparse.Namespace) -> int:
    n = args.n if args.n is not None else len(args.window.split())
    order = resolve_order(args.order, args.r, n)
    g = _parse_window(args.window, args.r, n)
    g_inv = inverse(g)
    data = _stats_block(order, g)
    data.update(
        {
            "r": args.r,
            "n": g.n,
            "order": str(order),
            "inverse": _stats_block(order, g_inv),
        }
    )
    _emit(data, args)
    return 0


def cmd_bijection(args: argparse.Namespace) -> int:
    r = args.r
    if args.which == "phi":
        order = resolve_order(args.order, r, args.n or len(args.input.split()))
        f = _parse_sequence(args.input, r, args.n)
        g, lam = bijections.phi(order, f)
        back = bijections.phi_inverse(order, g, lam)
        data = {
            "input": str(f),
            "gamma": str(g),
            "lambda": str(lam),
            "roundtrip": "ok" if back == f else "failed",
        }
        _emit(data, args)
        if back != f:
            raise CheckFailure("reconstruction does not return the input")
        return 0
    if args.which == "block":
        n = args.n or len(args.input.split())
        order = resolve_order(args.order, r, n)
        if args.comp:
            comp = _parse_composition(args.comp)
            g = _parse_window(args.input, r, args.n)
            try:
                f = bijections.block_encode(order, g, comp)
            except ValueError as exc:
                raise CheckFailure(str(exc)) from exc
            g2, comp2 = bijections.block_decode(order, f)
            data = {
                "input": str(g),
                "composition": str(comp),
                "sequence": str(f),
                "roundtrip": "ok" if (g2, comp2) == (g, comp) else "failed",
            }
            _emit(data, args)
            if (g2, comp2) != (g, comp):
                raise CheckFailure("block decode does not return the input")
            return 0
        f = _parse_sequence(args.input, r, args.n)
        g, comp = bijections.block_decode(order, f)
        back = bijections.block_encode(order, g, comp)
        data = {
            "input": str(f),
            "gamma": str(g),
            "composition": str(comp),
            "roundtrip": "ok" if back == f else "failed",
        }
        _emit(data, args)
        if back != f:
            raise CheckFailure("block encode does not return the input")
        return 0
    if args.which == "psi":
        n = args.n or len(args.input.split())
        from_order = resolve_order(args.from_order, r, n)
        to_order = resolve_order(args.to_order, r, n)
        f = _parse_sequence(args.input, r, args.n)
        try:
            image = bijections.psi(from_order, to_order, f)
        except ValueError as exc:
            raise CheckFailure(str(exc)) from exc
        back = bijections.psi(to_order, from_order, image)
        data = {
            "input": str(f),
            "from": str(from_order),
            "to": str(to_order),
            "image": str(image),
            "col": seq_col(image),
            "roundtrip": "ok" if back == f else "failed",
        }
        _emit(data, args)
        if back != f:
            raise CheckFailure("reverse remap does not return the input")
        return 0
    if args.which == "bipartite":
        top = Partition(tuple(int(x) for x in args.top.split()))
        bottom = _parse_sequence(args.bottom, r, args.n)
        bp = bijections.BipartitePartition(top, bottom)
        try:
            g, lam, mu = bijections.bipartite_split(bp)
            back = bijections.bipartite_merge(g, lam, mu)
        except ValueError as exc:
            raise CheckFailure(str(exc)) from exc
        data = {
            "top": str(top),
            "bottom": str(bottom),
            "gamma": str(g),
            "lambda": str(lam),
            "mu": str(mu),
            "roundtrip": "ok" if back == bp else "failed",
        }
        _emit(data, args)
        if back != bp:
            raise CheckFailure("merge does not return the input")
        return 0
    raise UsageError(f"unknown bijection {args.which!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    which = args.identity
    if which == "carlitz":
        report = identities.verify_carlitz(args.n_max, args.t_cap)
    elif which == "gg1":
        report = identities.verify_gg1(args.n_cap, args.t_cap)
    elif which == "gg2":
        _guard(1, args.n, args.force)
        report = identities.verify_gg2(args.n, args.k1, args.k2)
    elif which == "fiber":
        order = resolve_order(args.order, args.r, args.n)
        eta = _parse_window(args.eta, args.r, args.n)
        report = identities.verify_fiber_identity(order, eta, args.max_f, args.t_cap)
    elif which == "lemma43":
        _guard(args.r, args.n, args.force)
        order = resolve_order(args.order, args.r, args.n)
        comps = (
            [_parse_composition(args.comp)]
            if args.comp
            else [c for c in enumerate_compositions(args.n)]
        )
        reports = [identities.verify_lemma43(args.r, c, order) for c in comps]
        failed = [rep for rep in reports if not rep.passed]
        report = identities.VerificationReport(
            "lemma43",
            {"r": args.r, "n": args.n, "order": str(order), "compositions": len(comps)},
            not failed,
            failed[0].witness | {"composition": failed[0].params["composition"]}
            if failed
            else None,
            sum(rep.wall_ms for rep in reports),
        )
    elif which == "four":
        _guard(args.r, args.n_cap, args.force)
        report = identities.verify_four_variate(
            args.r, args.n_cap, args.t_cap, args.order
        )
    elif which == "six":
        _guard(args.r, args.n, args.force)
        order = resolve_order(args.order, args.r, args.n)
        if order.kind != "ar" and not args.exploratory:
            raise UsageError(
                "the six-variate identity is stated for the ar order; "
                "pass --exploratory to probe other orders without asserting"
            )
        report = identities.verify_six_variate(
            args.r, args.n, args.k1, args.k2, order
        )
        if args.exploratory and order.kind != "ar":
            _emit(report.to_json_dict(include_timing=args.timing), args)
            return 0
    elif which == "bipartite-gf":
        _guard(args.r, args.n, args.force)
        report = identities.verify_bipartite_gf(args.r, args.n, args.k1, args.k2)
    else:
        raise UsageError(f"unknown identity {which!r}")
    _emit(report.to_json_dict(include_timing=args.timing), args)
    return 0 if report.passed else 1


def cmd_dist(args: argparse.Namespace) -> int:
    _guard(args.r, args.n, args.force)
    order = resolve_order(args.order, args.r, args.n)
    stats = [s.strip() for s in args.stats.split(",") if s.strip()]
    table = identities.dist_table(args.r, args.n, order, stats)
    if args.format == "csv":
        header = ",".join(table.vars) + ",coefficient"
        rows = [header]
        for exps, c in table.terms():
            rows.append(",".join(str(e) for e in exps) + f",{c}")
        text = "\n".join(rows) + "\n"
        if args.output:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
        return 0
    _emit(
        {
            "r": args.r,
            "n": args.n,
            "order": str(order),
            "stats": stats,
            "series": table.to_json_dict(),
        },
        args,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathstats",
        description="statistics, bijections and identity verification for colored permutations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", default=None, help="write to a file instead of stdout")
        p.add_argument("--timing", action="store_true", help="include wall time in reports")
        p.add_argument("--force", action="store_true", help="skip enumeration size guard")

    p_stats = sub.add_parser("stats", help="statistics of one window")
    p_stats.add_argument("--r", type=int, required=True)
    p_stats.add_argument("--n", type=int, default=None)
    p_stats.add_argument("--order", default="ar")
    p_stats.add_argument("window")
    common(p_stats)
    p_stats.set_defaults(func=cmd_stats)

    p_bij = sub.add_parser("bijection", help="run one map and its inverse")
    bij_sub = p_bij.add_subparsers(dest="which", required=True)

    def bij_common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--n", type=int, default=None)
        if with_input:
            p.add_argument("input")
        common(p)
        p.set_defaults(func=cmd_bijection)

    b_phi = bij_sub.add_parser("phi", help="sequence <-> (window, partition)")
    b_phi.add_argument("--order", default="ar")
    bij_common(b_phi)

    b_block = bij_sub.add_parser("block", help="sequence <-> block-form window")
    b_block.add_argument("--order", default="ar")
    b_block.add_argument("--comp", default=None, help="composition like 2,2,2 (encode)")
    bij_common(b_block)

    b_psi = bij_sub.add_parser("psi", help="order-change remap on a sequence")
    b_psi.add_argument("--from", dest="from_order", default="ar")
    b_psi.add_argument("--to", dest="to_order", default="bz")
    bij_common(b_psi)

    b_bip = bij_sub.add_parser("bipartite", help="two-row split and merge")
    b_bip.add_argument("--top", required=True, help="top row, e.g. '0 1 1 1'")
    b_bip.add_argument("--bottom", required=True, help="bottom row window text")
    bij_common(b_bip, with_input=False)

    p_verify = sub.add_parser("verify", help="coefficientwise identity verification")
    p_verify.add_argument(
        "identity",
        choices=(
            "carlitz",
            "gg1",
            "gg2",
            "fiber",
            "lemma43",
            "four",
            "six",
            "bipartite-gf",
        ),
    )
    p_verify.add_argument("--r", type=int, default=1)
    p_verify.add_argument("--n", type=int, default=2)
    p_verify.add_argument("--n-max", type=int, default=3)
    p_verify.add_argument("--n-cap", type=int, default=2)
    p_verify.add_argument("--t-cap", type=int, default=2)
    p_verify.add_argument("--k1", type=int, default=2)
    p_verify.add_argument("--k2", type=int, default=2)
    p_verify.add_argument("--max-f", type=int, default=2)
    p_verify.add_argument("--order", default="ar")
    p_verify.add_argument("--eta", default=None, help="window for the fiber identity")
    p_verify.add_argument("--comp", default=None, help="restrict lemma43 to one composition")
    p_verify.add_argument(
        "--exploratory",
        action="store_true",
        help="allow non-ar orders for six, reporting without asserting",
    )
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_dist = sub.add_parser("dist", help="dump a joint distribution table")
    p_dist.add_argument("--r", type=int, required=True)
    p_dist.add_argument("--n", type=int, required=True)
    p_dist.add_argument("--order", default="ar")
    p_dist.add_argument("--stats", default="des,maj", help="comma-separated statistics")
    common(p_dist)
    p_dist.set_defaults(func=cmd_dist)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CheckFailure as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
