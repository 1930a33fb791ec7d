#!/usr/bin/env python3
"""Print every connective on a grid of singleton truth degrees.

Rows are the T component of ``a <op> b`` for t_a, t_b on an even grid, once
per constant mode.  At the Boolean corners the classical tables show up; in
literal mode the results carry monad tags (``0.7+`` and so on).

    python scripts/connective_tables.py --steps 4 --mode literal
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from neutrosophic.logic import ConstantMode, EvalConfig, NLValue, Op, connective, nl_not


@dataclass(frozen=True)
class TableConfig:
    steps: int = 2  # grid is 0, 1/steps, ..., 1
    modes: tuple = (ConstantMode.CLASSICAL, ConstantMode.LITERAL)


def grid(steps: int) -> list[Fraction]:
    return [Fraction(k, steps) for k in range(steps + 1)]


def single(t) -> NLValue:
    return NLValue.from_scalars(t, 0, 0)


def render(cfg: TableConfig) -> str:
    values = grid(cfg.steps)
    lines = []
    for mode in cfg.modes:
        ecfg = EvalConfig(mode)
        lines.append(f"== {mode.value} mode ==")
        lines.append("not: " + "  ".join(f"{float(t):g}->{nl_not(single(t), ecfg).T}" for t in values))
        for op in Op:
            lines.append(f"-- {op.value}")
            header = "a\\b".ljust(8) + "".join(f"{float(b):<12g}" for b in values)
            lines.append(header)
            for a in values:
                row = [str(connective(op, single(a), single(b), ecfg).T) for b in values]
                lines.append(f"{float(a):<8g}" + "".join(f"{cell:<12}" for cell in row))
        lines.append("")
    return "\n".join(lines)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--steps", type=int, default=TableConfig.steps)
    parser.add_argument("--mode", choices=["classical", "literal", "both"], default="both")
    args = parser.parse_args(argv)
    modes = TableConfig.modes if args.mode == "both" else (ConstantMode(args.mode),)
    print(render(TableConfig(args.steps, modes)))


if __name__ == "__main__":
    main()
