"""Command-line front end: ``qswitch verify | invariant | search | tables | catalog``.

Exit status is 0 on success, 1 when a verification or table comparison
fails, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .catalog import BRAID_WORDS, GAUSS_CODES, diagram_names, named_diagram
from .diagram import BraidWordError, GaussCodeError, braid_closure_presentation, build_presentation
from .diagram import parse_braid_word, parse_gauss_code
from .invariants import MAX_LEVEL, deltas
from .rings import NonUnitError
from .search import load_config, preset_config, search, write_records
from .switch import (
    NotInvertibleError,
    Switch,
    SwitchError,
    alexander_switch,
    check_yang_baxter,
    lambda_of,
    named_switch,
    parse_switch,
    sideways,
    switch_names,
)
from .tables import TABLE_IDS, reproduce

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(out, structured: bool, record: dict, text: str) -> None:
    if structured:
        out.write(" ".join(f"{k}={v}" for k, v in record.items()) + "\n")
    else:
        out.write(text + "\n")


def _matrix_str(m) -> str:
    return "[" + "; ".join(", ".join(str(x) for x in row) for row in m) + "]"


def _load_switch(text: str) -> Switch:
    try:
        return parse_switch(text)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"cannot parse switch {text!r}: {exc}") from exc


def _levels(text: str) -> list[int]:
    try:
        levels = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --levels {text!r}") from exc
    if not levels or any(lv < 0 for lv in levels):
        raise UsageError("levels must be nonnegative integers")
    return levels


# commands -----------------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    s = _load_switch(args.switch)
    report = check_yang_baxter(s)
    for n, r in enumerate(report.residuals, start=1):
        _emit(out, args.structured, {"equation": n, "residual": r, "zero": "yes" if not r else "no"},
              f"equation {n}: {'ok' if not r else f'residual {r}'}")
    _emit(out, args.structured,
          {"units_bc": _yn(report.units_bc), "invertible": _yn(report.invertible), "braid_3x3": _yn(report.braid_3x3)},
          f"B, C units: {_yn(report.units_bc)}; invertible: {_yn(report.invertible)}; 3x3 identity: {_yn(report.braid_3x3)}")
    if report.verdict:
        try:
            lam = lambda_of(s)
            pair = sideways(s)
        except (SwitchError, NonUnitError, NotInvertibleError) as exc:
            _emit(out, args.structured, {"error": str(exc).replace(" ", "_")}, f"derived data failed: {exc}")
            return EXIT_FAIL
        _emit(out, args.structured, {"lambda": lam}, f"lambda = {lam}")
        _emit(out, args.structured, {"sideways_up": _matrix_str(pair.up).replace(" ", "")},
              f"S^+_- = {_matrix_str(pair.up)}")
        _emit(out, args.structured, {"sideways_down": _matrix_str(pair.down).replace(" ", "")},
              f"S^-_+ = {_matrix_str(pair.down)}")
    verdict = "pass" if report.verdict else "fail"
    _emit(out, args.structured, {"switch": s.serialize().replace(" ", ""), "verdict": verdict}, f"verdict: {verdict}")
    return EXIT_OK if report.verdict else EXIT_FAIL


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _presentation(args, s: Switch, use_t: bool):
    if args.gauss is not None:
        text = args.gauss
        if text in GAUSS_CODES:
            return text, build_presentation(named_diagram(text).gauss, s, use_t)
        try:
            code = parse_gauss_code(text)
        except GaussCodeError as exc:
            raise UsageError(str(exc)) from exc
        return str(code), build_presentation(code, s, use_t)
    text = args.braid
    if text in BRAID_WORDS:
        word = named_diagram(text).braid
        if args.strands is not None and args.strands != word.strands:
            raise UsageError(f"{text} has {word.strands} strands")
        return text, braid_closure_presentation(word, s, use_t)
    if args.strands is None:
        raise UsageError("--braid needs --strands")
    try:
        word = parse_braid_word(text, args.strands)
    except BraidWordError as exc:
        raise UsageError(str(exc)) from exc
    return str(word), braid_closure_presentation(word, s, use_t)


def cmd_invariant(args, out) -> int:
    if (args.gauss is None) == (args.braid is None):
        raise UsageError("give exactly one of --gauss or --braid")
    if args.alexander:
        s, use_t = alexander_switch(2), False
    else:
        s = _load_switch(args.switch)
        use_t = not args.no_t and s.ring == "quaternion"
    if not check_yang_baxter(s).verdict:
        out.write(f"error: {s.name or s.serialize()} is not a switch\n")
        return EXIT_FAIL
    name, pres = _presentation(args, s, use_t)
    levels = _levels(args.levels)
    if args.max_level < 0 or max(levels) > args.max_level:
        raise UsageError(f"levels exceed --max-level {args.max_level}")
    for d in deltas(pres.matrix, levels, max_level=args.max_level):
        record = {
            "diagram": name.replace(" ", "_"),
            "switch": s.name or s.serialize().replace(" ", ""),
            "level": d.level,
            "ring": d.ring,
            "delta": d.polynomial,
            "raw": d.raw,
            "generators": d.generators,
            "seconds": f"{d.seconds:.3f}",
        }
        _emit(out, args.structured, record, f"delta{d.level} = {d.polynomial}  (raw {d.raw})")
    return EXIT_OK


def cmd_search(args, out) -> int:
    try:
        config = load_config(args.config) if args.config else preset_config(args.preset)
    except (KeyError, ValueError, FileNotFoundError) as exc:
        raise UsageError(str(exc)) from exc
    records = search(config, jobs=args.jobs)
    if args.output:
        write_records(records, args.output)
    _emit(out, True, {"config": config.describe().replace(" ", ";")}, "")
    for r in records:
        out.write(r.serialize() + "\n")
    out.write(f"orbits={len(records)}\n")
    return EXIT_OK if all(r.verified for r in records) else EXIT_FAIL


def cmd_tables(args, out) -> int:
    report = reproduce(args.table, jobs=args.jobs)
    for line in report.lines():
        out.write(line + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_catalog(args, out) -> int:
    for name in switch_names():
        s = named_switch(name)
        out.write(f"switch={name} entries={s.serialize().replace(' ', '')}\n")
    for name in diagram_names():
        out.write(f"diagram={name} source={named_diagram(name).source.replace(' ', '_')}\n")
    return EXIT_OK


# parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qswitch", description="Linear switches and virtual knot ideal polynomials.")
    parser.add_argument("--structured", action="store_true", help="emit key=value records")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a switch")
    p.add_argument("--switch", required=True, help='catalog name or "A,B,C,D"')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invariant", help="ideal polynomials of a diagram")
    p.add_argument("--switch", default="budapest")
    p.add_argument("--alexander", action="store_true", help="use the commutative Alexander switch")
    p.add_argument("--no-t", action="store_true", help="do not twist quaternionic switches by t")
    p.add_argument("--gauss", help="Gauss code or catalog name")
    p.add_argument("--braid", help="braid word or catalog name")
    p.add_argument("--strands", type=int)
    p.add_argument("--levels", default="0,1,2", help="comma-separated levels (default 0,1,2)")
    p.add_argument("--max-level", type=int, default=MAX_LEVEL, help="refuse levels above this (default 2)")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("search", help="search for constant quaternionic switches")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--preset", default="table1", help="table1 | table2 | integer")
    g.add_argument("--config", help="INI file with a [search] section")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default from QSWITCH_JOBS)")
    p.add_argument("--output", help="also write records to this file")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("tables", help="recompute a reference table and diff it")
    p.add_argument("table", choices=TABLE_IDS)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("catalog", help="list named switches and diagrams")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"qswitch: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
