"""Neutrosophic truth values and connectives.

Each connective is one scalar formula applied componentwise to T, I and F.
The formulas below are written once and evaluated over three carriers:
:class:`NsSet` (Minkowski set arithmetic, the default), :class:`NsBound`
(exact scalars) and numpy arrays (sampling for correlated mode).  Python's
operator precedence matches the intended reading: ``*`` binds tighter than
``+``/``-``, which associate left to right.

Every connective clamps its output components, mapping anything below 0 to
``-0`` and anything above 1 to ``1+``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product

import numpy as np

from .errors import OutOfRange, UnboundAtom, UnsupportedOperand
from .nonstd import MINUS_ZERO, ONE, ONE_PLUS, THREE_PLUS, Monad, NsBound, Ordering, ns_add, ns_cmp
from .nsset import Interval, NsSet, clamp, clamp_bound, normalize

__all__ = [
    "ConstantMode",
    "EvalConfig",
    "NLValue",
    "Op",
    "Expr",
    "Atom",
    "Not",
    "Bin",
    "atoms",
    "nl_not",
    "nl_and",
    "nl_or",
    "nl_xor",
    "nl_imp",
    "nl_iff",
    "nl_nand",
    "nl_nor",
    "connective",
    "evaluate",
    "FORMULAS",
    "within_bounds",
]


class ConstantMode(enum.Enum):
    CLASSICAL = "classical"  # constants are {1}
    LITERAL = "literal"  # constants are {1+}


@dataclass(frozen=True)
class EvalConfig:
    constant_mode: ConstantMode = ConstantMode.CLASSICAL
    correlated: bool = False
    # correlated mode: max samples per combination of atom pieces
    sample_budget: int = 4096

    @property
    def constant(self) -> NsBound:
        return ONE_PLUS if self.constant_mode is ConstantMode.LITERAL else ONE


DEFAULT_CONFIG = EvalConfig()


def _component(x) -> NsSet:
    if isinstance(x, NsSet):
        return x
    if isinstance(x, str):
        return NsSet.parse(x)
    return NsSet.point(x)


def _within_unit(s: NsSet) -> bool:
    return ns_cmp(s.inf(), MINUS_ZERO) is not Ordering.LESS and ns_cmp(s.sup(), ONE_PLUS) is not Ordering.GREATER


@dataclass(frozen=True)
class NLValue:
    """A truth value ``(T, I, F)``.

    Components are arbitrary nonempty subsets of ``[-0, 1+]``; nothing ties
    them together (their sums range anywhere from ``-0`` to ``3+``).
    Components may be given as NsSets, set literals or plain numbers.
    """

    T: NsSet
    I: NsSet  # noqa: E741
    F: NsSet

    def __post_init__(self):
        for name in "TIF":
            s = _component(getattr(self, name))
            if s.is_empty:
                raise OutOfRange(f"component {name} is empty")
            if not _within_unit(s):
                raise OutOfRange(f"component {name}={s} leaves the non-standard unit interval")
            object.__setattr__(self, name, s)

    @classmethod
    def from_scalars(cls, t, i, f) -> NLValue:
        return cls(NsSet.point(t), NsSet.point(i), NsSet.point(f))

    def components(self) -> tuple[NsSet, NsSet, NsSet]:
        return (self.T, self.I, self.F)

    @property
    def n_inf(self) -> NsBound:
        return reduce(ns_add, (s.inf() for s in self.components()))

    @property
    def n_sup(self) -> NsBound:
        return reduce(ns_add, (s.sup() for s in self.components()))

    @property
    def is_exact(self) -> bool:
        return all(s.is_exact for s in self.components())

    def __str__(self):
        return f"(T={self.T}, I={self.I}, F={self.F})"


# -- expressions ------------------------------------------------------------


class Op(enum.Enum):
    AND = "and"
    OR = "or"
    XOR = "xor"
    IMP = "imp"
    IFF = "iff"
    NAND = "nand"
    NOR = "nor"


class Expr:
    def __str__(self):
        from .dsl import format_expr

        return format_expr(self)


@dataclass(frozen=True, eq=True)
class Atom(Expr):
    name: str


@dataclass(frozen=True, eq=True)
class Not(Expr):
    operand: Expr


@dataclass(frozen=True, eq=True)
class Bin(Expr):
    op: Op
    left: Expr
    right: Expr


def atoms(e: Expr) -> list[str]:
    """Atom names in order of first appearance."""
    seen: dict[str, None] = {}

    def walk(node):
        if isinstance(node, Atom):
            seen.setdefault(node.name)
        elif isinstance(node, Not):
            walk(node.operand)
        else:
            walk(node.left)
            walk(node.right)

    walk(e)
    return list(seen)


# -- scalar formulas --------------------------------------------------------


def _not(one, a):
    return one - a


def _and(one, a, b):
    return a * b


def _or(one, a, b):
    return a + b - a * b


def _xor(one, a, b):
    # complement factors are (1 - x); a literal product with {1} would not
    # reproduce exclusive-or at the Boolean corners
    return a * (one - b) + b * (one - a) - a * b * (one - a) * (one - b)


def _imp(one, a, b):
    return one - a + a * b


def _iff(one, a, b):
    return (one - a + a * b) * (one - b + a * b)


def _nand(one, a, b):
    return one - a * b


def _nor(one, a, b):
    return (one - a) * (one - b)


FORMULAS = {
    Op.AND: _and,
    Op.OR: _or,
    Op.XOR: _xor,
    Op.IMP: _imp,
    Op.IFF: _iff,
    Op.NAND: _nand,
    Op.NOR: _nor,
}


# -- connectives on truth values --------------------------------------------


def _lift(formula, cfg: EvalConfig, *values: NLValue) -> NLValue:
    one = NsSet.point(cfg.constant)
    parts = [clamp(formula(one, *comps)) for comps in zip(*(v.components() for v in values))]
    return NLValue(*parts)


def nl_not(a: NLValue, cfg: EvalConfig = DEFAULT_CONFIG) -> NLValue:
    return _lift(_not, cfg, a)


def connective(op: Op, a: NLValue, b: NLValue, cfg: EvalConfig = DEFAULT_CONFIG) -> NLValue:
    return _lift(FORMULAS[op], cfg, a, b)


def _fold(op: Op, values, cfg):
    return reduce(lambda x, y: connective(op, x, y, cfg), values)


def nl_and(a: NLValue, b: NLValue, *more: NLValue, cfg: EvalConfig = DEFAULT_CONFIG) -> NLValue:
    """Conjunction; extra operands fold from the left."""
    return _fold(Op.AND, (a, b, *more), cfg)


def nl_or(a: NLValue, b: NLValue, *more: NLValue, cfg: EvalConfig = DEFAULT_CONFIG) -> NLValue:
    """Weak (inclusive) disjunction; extra operands fold from the left."""
    return _fold(Op.OR, (a, b, *more), cfg)


def nl_xor(a: NLValue, b: NLValue, *more: NLValue, cfg: EvalConfig = DEFAULT_CONFIG) -> NLValue:
    """Strong (exclusive) disjunction; extra operands fold from the left."""
    return _fold(Op.XOR, (a, b, *more), cfg)


def nl_imp(a: NLValue, b: NLValue, cfg: EvalConfig = DEFAULT_CONFIG) -> NLValue:
    return connective(Op.IMP, a, b, cfg)


def nl_iff(a: NLValue, b: NLValue, cfg: EvalConfig = DEFAULT_CONFIG) -> NLValue:
    return connective(Op.IFF, a, b, cfg)


def nl_nand(a: NLValue, b: NLValue, cfg: EvalConfig = DEFAULT_CONFIG) -> NLValue:
    return connective(Op.NAND, a, b, cfg)


def nl_nor(a: NLValue, b: NLValue, cfg: EvalConfig = DEFAULT_CONFIG) -> NLValue:
    return connective(Op.NOR, a, b, cfg)


# -- evaluation -------------------------------------------------------------


def evaluate(e: Expr, env: dict, cfg: EvalConfig = DEFAULT_CONFIG) -> NLValue:
    """Evaluate ``e`` bottom-up against ``env`` (atom name -> NLValue).

    In correlated mode every occurrence of an atom takes the same value: each
    component is the sampled hull of the expression's scalar formula over the
    atoms' sets.  That avoids the widening caused by treating repeated
    occurrences independently, but only works for exact-bound inputs.
    """
    for name in atoms(e):
        if name not in env:
            raise UnboundAtom(name)
    if cfg.correlated:
        return _evaluate_correlated(e, env, cfg)
    return _evaluate(e, env, cfg)


def _evaluate(e, env, cfg):
    if isinstance(e, Atom):
        return env[e.name]
    if isinstance(e, Not):
        return nl_not(_evaluate(e.operand, env, cfg), cfg)
    return connective(e.op, _evaluate(e.left, env, cfg), _evaluate(e.right, env, cfg), cfg)


def _eval_tree(e, leaf, one, clip):
    if isinstance(e, Atom):
        return leaf(e.name)
    if isinstance(e, Not):
        return clip(_not(one, _eval_tree(e.operand, leaf, one, clip)))
    left = _eval_tree(e.left, leaf, one, clip)
    right = _eval_tree(e.right, leaf, one, clip)
    return clip(FORMULAS[e.op](one, left, right))


def _np_clip(x):
    return np.clip(x, 0.0, 1.0)


@dataclass(frozen=True)
class _Grid:
    """Evenly spaced sample positions inside one piece of an atom's set.

    Position ``j`` is ``lo + (hi - lo) * j / steps``; open ends drop the first
    or last position.  Floats feed the sampling, exact values are built only
    for the positions that end up at an extreme.
    """

    lo: Fraction
    hi: Fraction
    steps: int
    first: int
    last: int

    @classmethod
    def for_piece(cls, piece, m: int) -> _Grid:
        if isinstance(piece, NsBound):
            return cls(piece.standard_part, piece.standard_part, 1, 0, 0)
        first, last = int(piece.lo_open), m - 1 - int(piece.hi_open)
        if first > last:
            # an open piece too narrow for the grid: use its midpoint
            return cls(piece.lo.standard_part, piece.hi.standard_part, 2, 1, 1)
        return cls(piece.lo.standard_part, piece.hi.standard_part, m - 1, first, last)

    def __len__(self):
        return self.last - self.first + 1

    def floats(self) -> np.ndarray:
        j = np.arange(self.first, self.last + 1)
        return float(self.lo) + (float(self.hi) - float(self.lo)) * j / self.steps

    def exact(self, i: int) -> Fraction:
        return self.lo + (self.hi - self.lo) * (self.first + i) / self.steps


def _correlated_component(e: Expr, names: list[str], sets: list[NsSet], cfg: EvalConfig) -> NsSet:
    k = len(names)
    m = max(2, min(65, int(cfg.sample_budget ** (1.0 / k))))
    out = []
    for combo in product(*(s.pieces() for s in sets)):
        grids = [_Grid.for_piece(piece, m) for piece in combo]
        shape = [len(g) for g in grids]
        arrays = {}
        for axis, (name, grid) in enumerate(zip(names, grids)):
            axes = [1] * k
            axes[axis] = len(grid)
            arrays[name] = grid.floats().reshape(axes)
        sampled = np.broadcast_to(_eval_tree(e, arrays.__getitem__, 1.0, _np_clip), shape)
        extremes = []
        for flat in (int(np.argmin(sampled)), int(np.argmax(sampled))):
            idx = np.unravel_index(flat, shape)
            point = {name: NsBound(grid.exact(i)) for name, grid, i in zip(names, grids, idx)}
            extremes.append(_eval_tree(e, point.__getitem__, cfg.constant, clamp_bound))
        lo, hi = extremes
        if ns_cmp(lo, hi) is Ordering.LESS:
            out.append(Interval(_outer(lo, Monad.LEFT), _outer(hi, Monad.RIGHT)))
        else:
            out += [lo, hi]
    return normalize(out)


def _outer(b: NsBound, side: Monad) -> NsBound:
    return b.with_monad(side) if b.monad is Monad.BINAD else b


def _evaluate_correlated(e, env, cfg):
    names = atoms(e)
    for name in names:
        if not env[name].is_exact:
            raise UnsupportedOperand(f"correlated mode needs exact bounds; {name} = {env[name]}")
    parts = []
    for c in range(3):
        sets = [env[name].components()[c] for name in names]
        parts.append(_correlated_component(e, names, sets, cfg))
    return NLValue(*parts)


def within_bounds(v: NLValue) -> bool:
    """Components inside ``[-0, 1+]`` and ``-0 <= n_inf <= n_sup <= 3+``."""
    if not all(_within_unit(s) for s in v.components()):
        return False
    # a binad sum is checked through its outer monads
    lo, hi = v.n_inf.monads()[0], v.n_sup.monads()[-1]
    return (
        ns_cmp(lo, MINUS_ZERO) in (Ordering.GREATER, Ordering.EQUAL)
        and ns_cmp(lo, hi) in (Ordering.LESS, Ordering.EQUAL)
        and ns_cmp(hi, THREE_PLUS) in (Ordering.LESS, Ordering.EQUAL)
    )

