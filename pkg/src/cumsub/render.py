"""Row builders and serialisers for solve tables, shared by the CLI and tests."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Sequence, TextIO

from . import __version__
from .core import Convention, OutcomePair
from .solver import SolveTable

BASE = Convention.FvF


def fmt_moves(moves: Sequence[int]) -> str:
    return ",".join(map(str, moves))


def fmt_delta(d: int) -> str:
    return f"+{d}" if d > 0 else str(d)


def solve_rows(t: SolveTable, conventions: Sequence[Convention]) -> list[dict[str, Any]]:
    """One dict per heap; deltas are measured against FvF."""
    rows = []
    for h in range(t.hmax + 1):
        row: dict[str, Any] = {"heap": h}
        b1, b2 = t.o1[BASE][h], t.o2[BASE][h]
        for x in conventions:
            o1, o2 = t.o1[x][h], t.o2[x][h]
            row[x.value] = {
                "o1": o1,
                "o2": o2,
                "moves": list(t.moves[x][h]),
                "d1": o1 - b1,
                "d2": o2 - b2,
            }
        rows.append(row)
    return rows


def csv_header(conventions: Sequence[Convention]) -> list[str]:
    cols = ["heap"]
    for x in conventions:
        cols += [x.value, f"{x.value}_moves"]
        if x is not BASE:
            cols += [f"{x.value}_d_alpha", f"{x.value}_d_beta"]
    return cols


def csv_cells(row: dict[str, Any], conventions: Sequence[Convention]) -> list[str]:
    cells = [str(row["heap"])]
    for x in conventions:
        e = row[x.value]
        cells += [f"({e['o1']},{e['o2']})", fmt_moves(e["moves"])]
        if x is not BASE:
            cells += [fmt_delta(e["d1"]), fmt_delta(e["d2"])]
    return cells


def meta_line(meta: dict[str, Any]) -> str:
    parts = [f"{k}={v}" for k, v in meta.items()]
    return "# " + " ".join(parts)


def base_meta(command: str, **params: Any) -> dict[str, Any]:
    meta: dict[str, Any] = {"tool": "cumsub", "version": __version__, "command": command}
    meta.update(params)
    return meta


def write_csv(out: TextIO, header: Sequence[str], rows: Iterable[Sequence[Any]], meta: dict[str, Any]) -> None:
    out.write(meta_line(meta) + "\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(r)


def write_json(out: TextIO, payload: dict[str, Any]) -> None:
    json.dump(payload, out, indent=2, default=str)
    out.write("\n")


def write_text_table(out: TextIO, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    body = [list(map(str, r)) for r in rows]
    widths = [len(h) for h in header]
    for r in body:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]
    line = " | ".join(h.ljust(w) for h, w in zip(header, widths))
    out.write(line + "\n")
    out.write("-+-".join("-" * w for w in widths) + "\n")
    for r in body:
        out.write(" | ".join(c.ljust(w) for c, w in zip(r, widths)) + "\n")


def text_cells(row: dict[str, Any], conventions: Sequence[Convention]) -> tuple[list[str], list[str]]:
    """Text cells: ``(o1,o2), moves`` then the two deltas."""
    header = ["Heap"]
    cells = [str(row["heap"])]
    for x in conventions:
        e = row[x.value]
        cell = f"({e['o1']},{e['o2']})"
        if e["moves"]:
            cell += ", " + fmt_moves(e["moves"])
        header.append(x.value)
        cells.append(cell)
        if x is not BASE:
            header += ["d_alpha", "d_beta"]
            cells += [fmt_delta(e["d1"]), fmt_delta(e["d2"])]
    return header, cells


def read_solve_csv(text: str) -> tuple[list[Convention], dict[Convention, list[tuple[OutcomePair, tuple[int, ...]]]]]:
    """Parse ``solve --format csv`` output back into outcomes and move sets."""
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.DictReader(io.StringIO("\n".join(lines)))
    convs = [Convention(c) for c in (reader.fieldnames or []) if c in Convention.__members__]
    parsed: dict[Convention, list[tuple[OutcomePair, tuple[int, ...]]]] = {x: [] for x in convs}
    for r in reader:
        for x in convs:
            moves = tuple(int(m) for m in r[f"{x.value}_moves"].split(",") if m)
            parsed[x].append((OutcomePair.parse(r[x.value]), moves))
    return convs, parsed
