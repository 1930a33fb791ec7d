"""Batch runner: parse a program, evaluate its queries, print the results.

Usage::

    nlcalc [FILE] [--mode classical|literal] [--correlated] [--format text|json]

Reads standard input when FILE is omitted or ``-``.  Exit status is 0 on
success, 1 for syntax or validation errors and 2 for evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from itertools import product

from .dsl import Assign, Classify, Eval, Program, Table, format_expr, parse_program, parse_value
from .errors import EvaluationError, NeutrosophicError, TooManyAtoms
from .logic import Atom, ConstantMode, EvalConfig, Expr, NLValue, Not, Op, atoms, evaluate
from .nonstd import format_number, parse_bound
from .nsset import Interval, NsSet, normalize
from .taxonomy import LogicClass, TruthGrade, classify, truth_grade

__all__ = [
    "EvalResult",
    "ClassifyResult",
    "TableRow",
    "TableResult",
    "run_program",
    "iter_program",
    "table",
    "format_value",
    "parse_value_json",
    "parse_formatted",
    "render_results",
    "main",
    "MAX_TABLE_ATOMS",
]

MAX_TABLE_ATOMS = 8
TRUE_CORNER = NLValue.from_scalars(1, 0, 0)
FALSE_CORNER = NLValue.from_scalars(0, 0, 1)


@dataclass(frozen=True)
class EvalResult:
    index: int
    expr: Expr
    value: NLValue


@dataclass(frozen=True)
class ClassifyResult:
    index: int
    expr: Expr
    value: NLValue
    logic_class: LogicClass
    grade: TruthGrade


@dataclass(frozen=True)
class TableRow:
    assignment: tuple[tuple[str, bool], ...]
    truth: NsSet
    expected: bool

    @property
    def ok(self) -> bool:
        return self.truth == NsSet.point(1 if self.expected else 0)


@dataclass(frozen=True)
class TableResult:
    index: int
    expr: Expr
    atoms: tuple[str, ...]
    rows: tuple[TableRow, ...]

    @property
    def mismatches(self) -> int:
        return sum(not row.ok for row in self.rows)


# -- evaluation -------------------------------------------------------------


def _classical(e: Expr, env: dict[str, bool]) -> bool:
    if isinstance(e, Atom):
        return env[e.name]
    if isinstance(e, Not):
        return not _classical(e.operand, env)
    a, b = _classical(e.left, env), _classical(e.right, env)
    return {
        Op.AND: a and b,
        Op.OR: a or b,
        Op.XOR: a != b,
        Op.IMP: (not a) or b,
        Op.IFF: a == b,
        Op.NAND: not (a and b),
        Op.NOR: not (a or b),
    }[e.op]


def table(e: Expr, index: int = 0) -> TableResult:
    """Evaluate ``e`` at every Boolean corner, in classical mode.

    True atoms get ``(1, 0, 0)``, false ones ``(0, 0, 1)``; each row pairs the
    resulting T component with the two-valued answer.
    """
    names = atoms(e)
    if len(names) > MAX_TABLE_ATOMS:
        raise TooManyAtoms(f"table needs at most {MAX_TABLE_ATOMS} atoms, got {len(names)}")
    cfg = EvalConfig(ConstantMode.CLASSICAL)
    rows = []
    for bits in product((True, False), repeat=len(names)):
        truth = dict(zip(names, bits))
        env = {n: TRUE_CORNER if b else FALSE_CORNER for n, b in truth.items()}
        value = evaluate(e, env, cfg)
        rows.append(TableRow(tuple(truth.items()), value.T, _classical(e, truth)))
    return TableResult(index, e, tuple(names), tuple(rows))


def iter_program(program: Program, cfg: EvalConfig = EvalConfig()):
    """Run statements in order, yielding one result per query.

    Stops at the first failure with an EvaluationError naming the 1-based
    statement number.
    """
    env: dict[str, NLValue] = {}
    for index, stmt in enumerate(program.statements, start=1):
        try:
            if isinstance(stmt, Assign):
                env[stmt.name] = stmt.value
            elif isinstance(stmt, Eval):
                yield EvalResult(index, stmt.expr, evaluate(stmt.expr, env, cfg))
            elif isinstance(stmt, Classify):
                value = evaluate(stmt.expr, env, cfg)
                yield ClassifyResult(index, stmt.expr, value, classify(value), truth_grade(value))
            elif isinstance(stmt, Table):
                yield table(stmt.expr, index)
        except NeutrosophicError as exc:
            raise EvaluationError(index, exc) from exc


def run_program(program: Program, cfg: EvalConfig = EvalConfig()) -> list:
    return list(iter_program(program, cfg))


# -- value serialization ----------------------------------------------------


def _set_records(s: NsSet) -> list[dict]:
    records = []
    for piece in s.pieces():
        if isinstance(piece, Interval):
            records.append(
                {"lo": str(piece.lo), "hi": str(piece.hi), "lo_open": piece.lo_open, "hi_open": piece.hi_open}
            )
        else:
            records.append({"point": str(piece)})
    return records


def _value_json(v: NLValue) -> dict:
    return {"T": _set_records(v.T), "I": _set_records(v.I), "F": _set_records(v.F)}


def format_value(v: NLValue, mode: str = "text") -> str:
    if mode == "text":
        return str(v)
    if mode == "json":
        return json.dumps(_value_json(v))
    raise ValueError(f"unknown format {mode!r}")


def _set_from_records(records: list[dict]) -> NsSet:
    items = []
    for rec in records:
        if "point" in rec:
            items.append(parse_bound(rec["point"]))
        else:
            lo, hi = parse_bound(rec["lo"]), parse_bound(rec["hi"])
            items.append(Interval(lo, hi, bool(rec.get("lo_open", False)), bool(rec.get("hi_open", False))))
    return normalize(items)


def parse_value_json(text: str | dict) -> NLValue:
    data = json.loads(text) if isinstance(text, str) else text
    return NLValue(*(_set_from_records(data[c]) for c in "TIF"))


def parse_formatted(text: str, mode: str = "text") -> NLValue:
    return parse_value(text) if mode == "text" else parse_value_json(text)


# -- rendering --------------------------------------------------------------


def _result_json(r) -> dict:
    out = {"statement": r.index, "expr": format_expr(r.expr)}
    if isinstance(r, EvalResult):
        out.update(kind="eval", value=_value_json(r.value))
    elif isinstance(r, ClassifyResult):
        n = r.logic_class.n
        out.update(
            kind="classify",
            value=_value_json(r.value),
            singleton=r.logic_class.singleton,
            n=None if n is None else format_number(n),
            flags=r.logic_class.flag_names(),
            grade=r.grade.value,
        )
    else:
        out.update(
            kind="table",
            atoms=list(r.atoms),
            rows=[
                {
                    "assignment": {name: int(bit) for name, bit in row.assignment},
                    "T": _set_records(row.truth),
                    "expected": int(row.expected),
                    "ok": row.ok,
                }
                for row in r.rows
            ],
            mismatches=r.mismatches,
        )
    return out


def _result_text(r) -> list[str]:
    if isinstance(r, EvalResult):
        return [f"eval {format_expr(r.expr)}", f"  {r.value}"]
    if isinstance(r, ClassifyResult):
        lc = r.logic_class
        lines = [f"classify {format_expr(r.expr)}", f"  value: {r.value}"]
        lines.append(f"  flags: {', '.join(lc.flag_names()) or '-'}")
        if lc.n is not None:
            lines.append(f"  n: {format_number(lc.n)}")
        lines.append(f"  grade: {r.grade.value}")
        return lines
    lines = [f"table {format_expr(r.expr)}"]
    for row in r.rows:
        bits = " ".join(f"{name}={int(bit)}" for name, bit in row.assignment)
        mark = "ok" if row.ok else "MISMATCH"
        lines.append(f"  {bits} | T={row.truth} classical={int(row.expected)} {mark}")
    lines.append(f"  mismatches: {r.mismatches}")
    return lines


def render_results(results, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([_result_json(r) for r in results], indent=2) + "\n"
    return "".join(line + "\n" for r in results for line in _result_text(r))


# -- entry point ------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nlcalc", description="Evaluate neutrosophic logic programs.")
    parser.add_argument("file", nargs="?", default="-", help="program file (default: standard input)")
    parser.add_argument("--mode", choices=["classical", "literal"], default="classical",
                        help="constant used by the connectives: {1} or {1+}")
    parser.add_argument("--correlated", action="store_true",
                        help="treat repeated atoms as the same variable (sampled hull)")
    parser.add_argument("--format", choices=["text", "json"], default="text", dest="fmt")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.file == "-":
        source = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            source = fh.read()

    try:
        program = parse_program(source)
    except NeutrosophicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    cfg = EvalConfig(ConstantMode(args.mode), correlated=args.correlated)
    results = []
    status = 0
    try:
        for result in iter_program(program, cfg):
            results.append(result)
            if args.fmt == "text":
                sys.stdout.write(render_results([result]))
    except EvaluationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        status = 2
    if args.fmt == "json":
        sys.stdout.write(render_results(results, "json"))
    return status

