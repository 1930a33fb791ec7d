#!/usr/bin/env python3
"""How much wider compositional results get when an atom repeats.

For each expression, draw random exact intervals for the atoms and compare
the T-component width of compositional evaluation (every occurrence is an
independent variable) with the correlated sampled hull (one variable per
atom).  Reports mean widths and the mean ratio.

    python scripts/dependency_widening.py --trials 200 --seed 1
"""

import argparse
import random
from dataclasses import dataclass
from fractions import Fraction
from statistics import mean

from neutrosophic.dsl import parse_expr
from neutrosophic.logic import ConstantMode, EvalConfig, NLValue, evaluate
from neutrosophic.nsset import NsSet

EXPRESSIONS = (
    "A /\\ B",
    "A \\/ A",
    "A -> A",
    "A <-> B",
    "A (+) A",
    "(A -> B) /\\ (B -> A)",
    "!A \\/ A",
)


@dataclass(frozen=True)
class WideningConfig:
    trials: int = 100
    seed: int = 0
    max_width: Fraction = Fraction(3, 10)
    sample_budget: int = 4096


def hull_width(s: NsSet) -> float:
    return float(s.sup().standard_part - s.inf().standard_part)


def random_interval(r: random.Random, max_width: Fraction) -> NsSet:
    lo = Fraction(r.randint(0, 1000), 1000)
    hi = min(Fraction(1), lo + max_width * Fraction(r.randint(1, 1000), 1000))
    return NsSet.interval(lo, hi)


def run(cfg: WideningConfig) -> list[tuple[str, float, float, float]]:
    r = random.Random(cfg.seed)
    plain = EvalConfig(ConstantMode.CLASSICAL)
    corr = EvalConfig(ConstantMode.CLASSICAL, correlated=True, sample_budget=cfg.sample_budget)
    rows = []
    for text in EXPRESSIONS:
        e = parse_expr(text)
        wide, tight, ratio = [], [], []
        for _ in range(cfg.trials):
            env = {n: NLValue(random_interval(r, cfg.max_width), 0, 0) for n in "AB"}
            w = hull_width(evaluate(e, env, plain).T)
            t = hull_width(evaluate(e, env, corr).T)
            wide.append(w)
            tight.append(t)
            if t > 0:
                ratio.append(w / t)
        rows.append((text, mean(wide), mean(tight), mean(ratio) if ratio else float("nan")))
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=WideningConfig.trials)
    parser.add_argument("--seed", type=int, default=WideningConfig.seed)
    args = parser.parse_args(argv)
    cfg = WideningConfig(trials=args.trials, seed=args.seed)
    print(f"{'expression':<24}{'compositional':>15}{'correlated':>12}{'ratio':>8}")
    for text, w, t, ratio in run(cfg):
        print(f"{text:<24}{w:>15.4f}{t:>12.4f}{ratio:>8.2f}")


if __name__ == "__main__":
    main()
