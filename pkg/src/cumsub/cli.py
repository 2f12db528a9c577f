"""Command-line driver.

Exit codes: 0 clean, 1 counterexample or mismatch found, 2 usage error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Sequence, TextIO

from . import __version__
from .analysis import (
    SAMPLER_ALGORITHM,
    Criterion,
    InfeasibleSample,
    SampleSpec,
    check_additive_formula,
    check_dominant_equality,
    check_first_formula,
    check_first_player_advantage,
    check_main_theorem,
    check_periodicity,
    check_ratio_conjecture,
    check_tiebreak_monotonicity,
    check_zs_ava,
    discrepancy_table,
    parallel_map,
    scan_sets,
)
from .analysis.scan import default_jobs, pairs, triples
from .core import (
    ALL_CONVENTIONS,
    Convention,
    InvalidSubtractionSet,
    PreconditionError,
    SubtractionSet,
)
from .render import (
    base_meta,
    csv_cells,
    csv_header,
    solve_rows,
    text_cells,
    write_csv,
    write_json,
    write_text_table,
)
from .solver import naive_pspe, outcome_arrays, play_line, solve, zero_sum_solve, zs_play_line

log = logging.getLogger("cumsub")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _set_arg(text: str) -> SubtractionSet:
    try:
        return SubtractionSet.parse(text)
    except InvalidSubtractionSet as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _conv_arg(text: str) -> Convention:
    try:
        return Convention.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _conv_list(text: str) -> list[Convention]:
    wanted = {_conv_arg(tok) for tok in text.split(",") if tok.strip()}
    return [x for x in ALL_CONVENTIONS if x in wanted]


def _sample_arg(text: str) -> SampleSpec:
    try:
        return SampleSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


@contextlib.contextmanager
def _output(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        yield fh


def _sets_from(args: argparse.Namespace) -> list[SubtractionSet]:
    if getattr(args, "set", None) is not None:
        return [args.set]
    if getattr(args, "sample", None) is not None:
        if args.seed is None:
            raise UsageError("--seed is required with --sample")
        try:
            return args.sample.draw(args.seed)
        except InfeasibleSample as exc:
            raise UsageError(str(exc)) from exc
    raise UsageError("one of --set or --sample is required")


def _sample_meta(args: argparse.Namespace) -> dict[str, Any]:
    if getattr(args, "sample", None) is None:
        return {"set": args.set.as_csv()}
    return {"sample": str(args.sample), "seed": args.seed, "sampler": SAMPLER_ALGORITHM}


# -- solve / zs / diff / line -------------------------------------------------

def cmd_solve(args: argparse.Namespace) -> int:
    convs = args.conventions
    t = solve(args.set, args.hmax, set(convs) | {Convention.FvF})
    rows = solve_rows(t, convs)
    meta = base_meta("solve", set=args.set.as_csv(), hmax=args.hmax,
                     conventions=",".join(x.value for x in convs))
    with _output(args.out) as out:
        if args.format == "csv":
            write_csv(out, csv_header(convs), (csv_cells(r, convs) for r in rows), meta)
        elif args.format == "json":
            write_json(out, {"meta": meta, "rows": rows})
        else:
            out.write(f"S = {args.set}\n")
            header: list[str] = []
            body = []
            for r in rows:
                header, cells = text_cells(r, convs)
                body.append(cells)
            write_text_table(out, header, body)
    return EXIT_OK


def cmd_zs(args: argparse.Namespace) -> int:
    zs = zero_sum_solve(args.set, args.hmax)
    a1, a2 = outcome_arrays(args.set, args.hmax, (Convention.AvA,))[Convention.AvA]
    header = ["heap", "o_zs", "ava_gap"]
    rows = [[h, zs[h], a1[h] - a2[h]] for h in range(args.hmax + 1)]
    meta = base_meta("zs", set=args.set.as_csv(), hmax=args.hmax)
    with _output(args.out) as out:
        _emit(out, args.format, header, rows, meta)
    return EXIT_OK


def cmd_diff(args: argparse.Namespace) -> int:
    records = discrepancy_table(args.set, args.base, args.other, args.hmax)
    header = ["heap", "d1", "d2", "diff_of_diff"]
    rows = [[r.heap, r.d1, r.d2, r.diff_of_diff] for r in records]
    meta = base_meta("diff", set=args.set.as_csv(), hmax=args.hmax,
                     base=args.base.value, other=args.other.value)
    with _output(args.out) as out:
        _emit(out, args.format, header, rows, meta)
    return EXIT_OK


def cmd_line(args: argparse.Namespace) -> int:
    if args.zero_sum:
        line = zs_play_line(args.set, args.heap)
        label = "zero-sum"
    else:
        line = play_line(solve(args.set, args.heap, (args.convention,)), args.convention, args.heap)
        label = args.convention.value
    totals = {1: 0, 2: 0}
    for mover, a in line:
        totals[mover] += a
    seq = "-".join(str(a) for _, a in line) or "(no moves)"
    print(f"S = {args.set}, heap {args.heap}, {label}: {seq}")
    print(f"mover 1 takes {totals[1]}, mover 2 takes {totals[2]}")
    if args.zero_sum:
        print(f"score {totals[1] - totals[2]}")
    return EXIT_OK


def _emit(out: TextIO, fmt: str, header: Sequence[str], rows: list[list[Any]], meta: dict[str, Any]) -> None:
    if fmt == "csv":
        write_csv(out, header, rows, meta)
    elif fmt == "json":
        write_json(out, {"meta": meta, "rows": [dict(zip(header, r)) for r in rows]})
    else:
        write_text_table(out, header, rows)


# -- scan ---------------------------------------------------------------------

def cmd_scan(args: argparse.Namespace) -> int:
    sets = pairs(args.smax) if args.arity == 2 else triples(args.smax)
    if args.compare == "ava-zs":
        criterion = Criterion.ZS_VS_AVA
    else:
        criterion = Criterion.parse(args.criterion)
        if criterion is Criterion.ZS_VS_AVA:
            raise UsageError("use --compare ava-zs for the zero-sum comparison")
    points = scan_sets(sets, args.hmax, criterion, args.jobs)
    meta = base_meta("scan", arity=args.arity, compare=args.compare, criterion=criterion.value,
                     smax=args.smax, hmax=args.hmax)
    rows = []
    for p in points:
        s3, s2, s1 = p.coords
        rows.append(["" if s3 is None else s3, s2, s1, p.first_heap])
    with _output(args.out) as out:
        write_csv(out, ["s3", "s2", "s1", "first_heap"], rows, meta)
    summary = f"{len(points)} of {len(sets)} sets show a {criterion.value} discrepancy up to h={args.hmax}"
    print(summary, file=sys.stderr if args.out == "-" else sys.stdout)
    return EXIT_OK


# -- check --------------------------------------------------------------------

def _conv_tagged(fn: Callable[..., list], convs: Sequence[Convention]):
    def run(s: SubtractionSet, hmax: int) -> list:
        found = []
        for x in convs:
            found.extend({"convention": x.value, "heap": h} for h in fn(s, x, hmax))
        return found
    return run


def _checker(name: str, convs: Sequence[Convention]) -> Callable[[SubtractionSet, int], list]:
    if name == "first-player":
        return _conv_tagged(check_first_player_advantage, convs)
    return {
        "monotonicity": check_tiebreak_monotonicity,
        "main-theorem": check_main_theorem,
        "dominant-equality": check_dominant_equality,
        "ratio": check_ratio_conjecture,
        "first-formula": check_first_formula,
        "additive-formula": check_additive_formula,
        "zs-ava": check_zs_ava,
        "periodicity": check_periodicity,
    }[name]


CHECKERS = (
    "first-player",
    "monotonicity",
    "main-theorem",
    "dominant-equality",
    "ratio",
    "first-formula",
    "additive-formula",
    "zs-ava",
    "periodicity",
)


@dataclass(frozen=True)
class _RunCheck:
    name: str
    hmax: int
    conventions: tuple[Convention, ...]

    def __call__(self, s: SubtractionSet) -> dict[str, Any]:
        try:
            found = _checker(self.name, self.conventions)(s, self.hmax)
        except PreconditionError as exc:
            return {"set": list(s.actions), "status": "skipped", "reason": str(exc), "violations": []}
        status = "violation" if found else "ok"
        return {"set": list(s.actions), "status": status, "violations": _jsonable(found)}


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Convention):
        return obj.value
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def cmd_check(args: argparse.Namespace) -> int:
    sets = _sets_from(args)
    convs = tuple(args.conventions)
    results = parallel_map(_RunCheck(args.name, args.hmax, convs), sets, args.jobs)
    counts = {"ok": 0, "violation": 0, "skipped": 0}
    for r in results:
        counts[r["status"]] += 1
    meta = base_meta("check", name=args.name, hmax=args.hmax, **_sample_meta(args))
    if args.name == "first-player":
        meta["conventions"] = ",".join(x.value for x in convs)
    for r in results:
        if r["status"] == "violation":
            shown = r["violations"][:10]
            more = len(r["violations"]) - len(shown)
            tail = f" (+{more} more)" if more > 0 else ""
            print(f"VIOLATION {SubtractionSet(r['set'])}: {shown}{tail}")
        elif r["status"] == "skipped" and len(results) == 1:
            print(f"SKIPPED {SubtractionSet(r['set'])}: {r['reason']}")
    print(f"{args.name}: {counts['ok']} ok, {counts['violation']} with violations, "
          f"{counts['skipped']} skipped (hmax={args.hmax})")
    if args.json:
        with _output(args.json) as out:
            write_json(out, {"meta": meta, "summary": counts, "results": results})
    if counts["violation"]:
        return EXIT_VIOLATION
    if counts["ok"] == 0:
        raise UsageError(f"checker {args.name!r} does not apply to any of the given sets")
    return EXIT_OK


# -- verify-oracle / sample ---------------------------------------------------

def cmd_verify_oracle(args: argparse.Namespace) -> int:
    sets = _sets_from(args)
    mismatches = []
    for s in sets:
        t = solve(s, args.hmax)
        for x in ALL_CONVENTIONS:
            for h in range(args.hmax + 1):
                ref = naive_pspe(s, x, h, memo=True)
                if ref != t.outcome(x, h):
                    mismatches.append((s, x, h, t.outcome(x, h), ref))
    for s, x, h, got, ref in mismatches[:20]:
        print(f"MISMATCH {s} {x} h={h}: table {got}, oracle {ref}")
    print(f"verify-oracle: {len(sets)} sets, {len(mismatches)} mismatches (hmax={args.hmax})")
    return EXIT_VIOLATION if mismatches else EXIT_OK


def cmd_sample(args: argparse.Namespace) -> int:
    try:
        sets = args.spec.draw(args.seed)
    except InfeasibleSample as exc:
        raise UsageError(str(exc)) from exc
    meta = base_meta("sample", sample=str(args.spec), seed=args.seed, sampler=SAMPLER_ALGORITHM)
    with _output(args.out) as out:
        if args.format == "json":
            write_json(out, {"meta": meta, "sets": [list(s.actions) for s in sets]})
        else:
            write_csv(out, ["size", "set"], ([len(s), s.as_csv()] for s in sets), meta)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cumsub", description=__doc__.splitlines()[0] if __doc__ else None)
    p.add_argument("--version", action="version", version=f"cumsub {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add_set(sp, required=True):
        sp.add_argument("--set", type=_set_arg, required=required, help='actions, e.g. "3,5"')

    def add_sets(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--set", type=_set_arg, help='actions, e.g. "4,5,9"')
        g.add_argument("--sample", type=_sample_arg, help='e.g. "sizes=3..10,count=200,max=25"')
        sp.add_argument("--seed", type=int, help="required with --sample")

    def add_fmt(sp, choices=("text", "csv", "json")):
        sp.add_argument("--format", choices=choices, default=choices[0])
        sp.add_argument("--out", default="-", help="output path, '-' for stdout")

    sp = sub.add_parser("solve", help="PSPE outcome table")
    add_set(sp)
    sp.add_argument("--hmax", type=_nonneg, default=300)
    sp.add_argument("--conventions", type=_conv_list, default=list(ALL_CONVENTIONS))
    add_fmt(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("zs", help="zero-sum values next to the AvA utility gap")
    add_set(sp)
    sp.add_argument("--hmax", type=_nonneg, default=300)
    add_fmt(sp)
    sp.set_defaults(func=cmd_zs)

    sp = sub.add_parser("line", help="principal play line from one heap")
    add_set(sp)
    sp.add_argument("--heap", type=_nonneg, required=True)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--convention", type=_conv_arg, default=Convention.FvF)
    g.add_argument("--zero-sum", action="store_true")
    sp.set_defaults(func=cmd_line)

    sp = sub.add_parser("diff", help="per-heap discrepancy between two conventions")
    add_set(sp)
    sp.add_argument("--base", type=_conv_arg, default=Convention.FvF)
    sp.add_argument("--other", type=_conv_arg, default=Convention.AvA)
    sp.add_argument("--hmax", type=_nonneg, default=300)
    add_fmt(sp)
    sp.set_defaults(func=cmd_diff)

    sp = sub.add_parser("scan", help="sweep all 2- or 3-action sets up to smax")
    sp.add_argument("--arity", type=int, choices=(2, 3), required=True)
    sp.add_argument("--compare", choices=("fvf-ava", "ava-zs"), default="fvf-ava")
    sp.add_argument("--criterion", choices=("diff_of_diff", "componentwise"), default="diff_of_diff")
    sp.add_argument("--smax", type=int, default=25)
    sp.add_argument("--hmax", type=_nonneg, default=300)
    sp.add_argument("--out", default="-")
    sp.add_argument("--jobs", type=int, default=None)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("check", help="search for counterexamples to one claim")
    sp.add_argument("--name", choices=CHECKERS, required=True)
    add_sets(sp)
    sp.add_argument("--hmax", type=_nonneg, default=300)
    sp.add_argument("--conventions", type=_conv_list, default=list(ALL_CONVENTIONS),
                    help="conventions for first-player")
    sp.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    sp.add_argument("--jobs", type=int, default=None)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("verify-oracle", help="compare the table solver with the tree oracle")
    add_sets(sp)
    sp.add_argument("--hmax", type=_nonneg, default=30)
    sp.set_defaults(func=cmd_verify_oracle)

    sp = sub.add_parser("sample", help="draw random subtraction sets")
    sp.add_argument("--spec", type=_sample_arg, required=True, help='e.g. "sizes=3..10,count=200,max=25"')
    sp.add_argument("--seed", type=int, required=True)
    add_fmt(sp, ("csv", "json"))
    sp.set_defaults(func=cmd_sample)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "jobs", "unset") is None:
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"cumsub: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cumsub: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
