"""Independent reference computations for the test-suite.

None of these call into the arithmetic they check.
"""

from fractions import Fraction
from itertools import product

import numpy as np

from neutrosophic.nonstd import Monad, NsBound


# -- first-order infinitesimal algebra --------------------------------------


class FirstOrder:
    """``real + sum(c_k * e_k)`` with every product of infinitesimals dropped.

    Each operand gets its own infinitesimal ``e_k``, so ``-a + b+`` is
    ``(a + b) - e_x + e_y`` and its sign is genuinely undetermined.
    """

    def __init__(self, real, coeffs=None):
        self.real = Fraction(real)
        self.coeffs = dict(coeffs or {})

    def __add__(self, other):
        keys = set(self.coeffs) | set(other.coeffs)
        return FirstOrder(
            self.real + other.real, {k: self.coeffs.get(k, 0) + other.coeffs.get(k, 0) for k in keys}
        )

    def __neg__(self):
        return FirstOrder(-self.real, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        keys = set(self.coeffs) | set(other.coeffs)
        return FirstOrder(
            self.real * other.real,
            {k: self.real * other.coeffs.get(k, 0) + other.real * self.coeffs.get(k, 0) for k in keys},
        )


_SIDES = {Monad.EXACT: (0,), Monad.LEFT: (-1,), Monad.RIGHT: (1,), Monad.BINAD: (-1, 1)}
_MAGNITUDES = (Fraction(1), Fraction(1000), Fraction(1, 1000))


def eps_oracle(op, a: NsBound, b: NsBound) -> NsBound:
    """Result bound of ``op`` read off the first-order term over sampled infinitesimals."""
    x = FirstOrder(a.standard_part, {"x": 1})
    y = FirstOrder(b.standard_part, {"y": 1})
    result = op(x, y)
    signs = set()
    for sx, sy in product(_SIDES[a.monad], _SIDES[b.monad]):
        for mx, my in product(_MAGNITUDES, repeat=2):
            term = result.coeffs.get("x", 0) * sx * mx + result.coeffs.get("y", 0) * sy * my
            signs.add((term > 0) - (term < 0))
    if signs == {0}:
        monad = Monad.EXACT
    elif signs == {1}:
        monad = Monad.RIGHT
    elif signs == {-1}:
        monad = Monad.LEFT
    else:
        assert 1 in signs and -1 in signs, signs
        monad = Monad.BINAD
    return NsBound(result.real, monad)


# -- grid sampling over exact sets ------------------------------------------


def grid_samples(pieces, step=1000):
    """Integer multiples of 1/step inside ``pieces``.

    ``pieces`` is a list of ``(lo, hi)`` closed ranges (numbers on the grid)
    or bare numbers for isolated points.
    """
    out = []
    for piece in pieces:
        if isinstance(piece, tuple):
            lo, hi = (int(round(Fraction(v) * step)) for v in piece)
            out.append(np.arange(lo, hi + 1, dtype=np.int64))
        else:
            out.append(np.array([int(round(Fraction(piece) * step))], dtype=np.int64))
    return np.concatenate(out)


def sampled_hull(op, pieces1, pieces2, step=1000):
    """Min and max of ``op`` over every pair of grid samples, as floats."""
    a = grid_samples(pieces1, step)[:, None]
    b = grid_samples(pieces2, step)[None, :]
    if op == "add":
        values, scale = a + b, step
    elif op == "sub":
        values, scale = a - b, step
    elif op == "mul":
        values, scale = a * b, step * step
    else:
        raise ValueError(op)
    return values.min() / scale, values.max() / scale, values.ravel() / scale


# -- pointwise scalar connectives -------------------------------------------


def clip(x):
    return min(max(x, 0.0), 1.0)


def scalar_connective(op: str, a: float, b: float) -> float:
    """Plain-float truth functions on single truth degrees."""
    if op == "and":
        v = a * b
    elif op == "or":
        v = a + b - a * b
    elif op == "xor":
        v = a * (1 - b) + b * (1 - a) - a * b * (1 - a) * (1 - b)
    elif op == "imp":
        v = 1 - a + a * b
    elif op == "iff":
        v = (1 - a + a * b) * (1 - b + a * b)
    elif op == "nand":
        v = 1 - a * b
    elif op == "nor":
        v = (1 - a) * (1 - b)
    else:
        raise ValueError(op)
    return clip(v)


BOOLEAN = {
    "and": lambda a, b: a and b,
    "or": lambda a, b: a or b,
    "xor": lambda a, b: a != b,
    "imp": lambda a, b: (not a) or b,
    "iff": lambda a, b: a == b,
    "nand": lambda a, b: not (a and b),
    "nor": lambda a, b: not (a or b),
}
