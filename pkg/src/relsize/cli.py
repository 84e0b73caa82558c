"""Command-line front end.

Exit codes: 0 success, 1 law violations in ``check``, 2 input or usage errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .bits import elements
from .derived import product
from .errors import WorkbenchError
from .families import Collection, mesh
from .harness import HarnessConfig, hunt_counterexamples, run_law_suite, suite_failed
from .harness.registry import DEFAULT_ROSTER, semigroup_from_code
from .kernel import central_collection, make_kernel_context, relative_kernel
from .relative import ps_collection, syn_collection, thick_collection
from .semigroup import _SHORT, idempotents, standard_semigroup

OPS = ("mesh", "closure", "flags", "product", "syn", "thick", "ps", "kernel", "idempotents", "central")


class UsageError(WorkbenchError):
    pass


def _semigroup(ref: str):
    """A Cayley table file, or a roster code such as sl2."""
    if Path(ref).exists() or ref.endswith(".json"):
        return io.load_semigroup(ref)
    try:
        return semigroup_from_code(ref)
    except ValueError as exc:
        raise UsageError(f"{ref}: not a file and not a roster code ({exc})") from None


def _roster(value: str) -> tuple:
    if value == "default":
        return DEFAULT_ROSTER
    return tuple(_semigroup(part.strip()) if "." in part or "/" in part else _code(part.strip())
                 for part in value.split(",") if part.strip())


def _code(code: str) -> str:
    try:
        semigroup_from_code(code)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return code


def _config(args) -> HarnessConfig:
    return HarnessConfig(
        roster=_roster(args.roster),
        max_exhaustive=args.max_exhaustive,
        filter_exhaustive=args.filter_exhaustive,
        sample=args.sample,
        seed=args.seed,
        max_n=args.size,
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# analyze


def _sets(C: Collection) -> list[list[int]]:
    return C.to_json()["sets"]


def _filter(value: str, n: int, flag: str) -> Collection:
    # the listed sets generate the filter: [[0]] means up({0})
    C = io.collection_arg(value, n).up
    if not C.flags.filter:
        raise UsageError(f"{flag}: the sets listed do not generate a filter: their upward closure is not closed under intersection")
    return C


def cmd_analyze(args) -> int:
    S = _semigroup(args.semigroup)
    n = S.n
    colls = [io.collection_arg(c, n) for c in args.collection]
    F = _filter(args.filter, n, "--filter") if args.filter else (colls[0] if colls else None)
    if args.g_filter:
        G = _filter(args.g_filter, n, "--g-filter")
    elif len(colls) > (0 if args.filter else 1):
        G = colls[-1]
    else:
        G = Collection.top(n)
    A = io.parse_subset(args.set, n) if args.set is not None else None
    ops = args.op or ["flags"]
    needs_f = set(ops) - {"idempotents"}
    if needs_f and F is None:
        raise UsageError(f"--op {', '.join(sorted(needs_f))} needs --collection or --filter")

    out: dict = {"semigroup": S.name or args.semigroup, "n": n}
    if F is not None:
        out["F"] = _sets(F)
        out["G"] = _sets(G)
    if A is not None:
        out["A"] = elements(A)
    for op in ops:
        if op == "mesh":
            out["F*"] = _sets(mesh(F))
        elif op == "closure":
            out["F**"] = _sets(mesh(mesh(F)))
        elif op == "flags":
            out["flags(F)"] = F.flags.to_json()
        elif op == "product":
            out["F.G"] = _sets(product(S, F, G))
        elif op in ("syn", "thick", "ps"):
            fn = {"syn": syn_collection, "thick": thick_collection, "ps": ps_collection}[op]
            key = {"syn": "Syn", "thick": "Thick", "ps": "PS"}[op] + "(F,G)"
            C = fn(S, F, G)
            out[key] = _sets(C)
            if A is not None:
                out["A in " + key] = A in C
        elif op == "kernel":
            ctx = make_kernel_context(S, F, G)
            out["hypotheses"] = ctx.hypotheses
            out["K(F,G)"] = elements(relative_kernel(ctx))
        elif op == "idempotents":
            out["E(S)"] = elements(idempotents(S))
        elif op == "central":
            ctx = make_kernel_context(S, F, G)
            out["hypotheses"] = ctx.hypotheses
            C = central_collection(ctx)
            out["Cen(F,G)"] = _sets(C)
            if A is not None:
                out["A in Cen(F,G)"] = A in C
    if args.format == "json":
        text = io.dumps(out) + "\n"
    else:
        text = "".join(f"{k}: {io.dumps(out[k])}\n" for k in sorted(out))
    _emit(text, args.out)
    return 0


# check / hunt


def _report_text(r) -> str:
    skipped = ", ".join(f"{k}={v}" for k, v in r.skipped.items()) or "none"
    line = (f"{r.verdict.upper():4} {r.law_id}  checked={r.instances_checked} "
            f"skipped={skipped} violations={r.violation_count}")
    if r.weakened:
        line += f"  weakened={','.join(r.weakened)}"
    if r.note:
        line += f"\n     {r.note}"
    return line + "\n"


def _write_reports(reports, args) -> None:
    timing = not args.no_timing
    lines = "".join(r.to_line(timing) + "\n" for r in reports)
    if args.out:
        Path(args.out).write_text(lines)
    if args.format == "json":
        if not args.out:
            sys.stdout.write(lines)
    else:
        sys.stdout.write("".join(_report_text(r) for r in reports))


def cmd_check(args) -> int:
    reports = run_law_suite(_config(args), args.law or None, args.group)
    _write_reports(reports, args)
    return 1 if suite_failed(reports) else 0


def cmd_hunt(args) -> int:
    weaken = [w.strip() for item in args.weaken for w in item.split(",") if w.strip()]
    report = hunt_counterexamples(args.law_id, weaken, _config(args))
    _write_reports([report], args)
    return 0


def cmd_gen(args) -> int:
    kind = {v: k for k, v in _SHORT.items()}.get(args.kind, args.kind)
    try:
        S = standard_semigroup(kind, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(io.dumps(S.to_json()) + "\n", args.out)
    return 0


# parser


def _suite_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--roster", default="default",
                   help="'default' or comma separated codes (z3, lz2, rz2, sl3, rb2, t2) or table files")
    p.add_argument("--max-exhaustive", type=int, default=3,
                   help="largest n enumerated exhaustively for laws over arbitrary collections")
    p.add_argument("--filter-exhaustive", type=int, default=4,
                   help="largest n enumerated exhaustively for filter-only laws")
    p.add_argument("--sample", type=int, default=1000, help="instances per semigroup when sampling")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=None, help="skip roster semigroups with more elements")
    p.add_argument("--out", help="write JSON lines here")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--no-timing", action="store_true", help="omit wall_time_s from reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relsize", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="run operators on one semigroup")
    a.add_argument("semigroup", help="Cayley table JSON file or a roster code")
    a.add_argument("--collection", action="append", default=[],
                   help="collection literal or file; a second one is used as G")
    a.add_argument("--filter", help="F, generated upward from the listed sets (literal or file)")
    a.add_argument("--g-filter", help="G, generated like --filter; defaults to {S}")
    a.add_argument("--set", help="a subset A as a JSON list")
    a.add_argument("--op", action="append", choices=OPS)
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.add_argument("--out")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("check", help="run the law suite")
    c.add_argument("--law", action="append", help="restrict to these law ids")
    c.add_argument("--group", help="restrict to one law group")
    _suite_options(c)
    c.set_defaults(func=cmd_check)

    h = sub.add_parser("hunt", help="search for counterexamples with hypotheses dropped")
    h.add_argument("law_id")
    h.add_argument("--weaken", action="append", default=[], help="hypothesis name (repeatable)")
    _suite_options(h)
    h.set_defaults(func=cmd_hunt)

    g = sub.add_parser("gen", help="emit a standard semigroup table")
    g.add_argument("kind", help="cyclic_group, left_zero, right_zero, meet_semilattice_chain, "
                                "rectangular_band, full_transformation (or z, lz, rz, sl, rb, t)")
    g.add_argument("n", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WorkbenchError, OSError) as exc:
        print(f"relsize: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
