"""Non-standard scalars: a real standard part carrying a monad tag.

A bound is one of ``a`` (exact), ``-a`` (left monad, a minus an
infinitesimal), ``a+`` (right monad) or ``-a+`` (binad, both sides of ``a``
but not ``a`` itself).  The infinitesimal is never stored: every operation
works to first order, and each operand contributes its own independent
infinitesimal.  The result tag is read off the set of signs the first-order
term can take:

    {0} -> exact, {+} -> right, {-} -> left, both signs -> binad

This reproduces the addition table exactly (left monads absorb each other,
right monads absorb each other, left + right is a binad).  Subtraction and
multiplication follow from the same rule; the multiplication rule is a
reconstruction, as no explicit monad product table exists.

Standard parts are held as :class:`fractions.Fraction` so sums and products
of decimal literals stay exact.  Floats are converted through their shortest
``repr`` (``0.1`` becomes ``1/10``, not the binary expansion).
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational, Real

from .errors import NegativeOperand

__all__ = [
    "Monad",
    "Ordering",
    "NsBound",
    "ns_add",
    "ns_sub",
    "ns_mul",
    "ns_cmp",
    "standard_part",
    "to_fraction",
    "format_number",
    "parse_bound",
    "ZERO",
    "ONE",
    "MINUS_ZERO",
    "ONE_PLUS",
    "THREE_PLUS",
]


class Monad(enum.Enum):
    EXACT = "exact"
    LEFT = "left"
    RIGHT = "right"
    BINAD = "binad"


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1
    INCOMPARABLE = None


_SIGNS = {
    Monad.EXACT: frozenset({0}),
    Monad.LEFT: frozenset({-1}),
    Monad.RIGHT: frozenset({1}),
    Monad.BINAD: frozenset({-1, 1}),
}
_ALL_SIGNS = frozenset({-1, 0, 1})

# position inside one standard part: -a < a < a+
_RANK = {Monad.LEFT: 0, Monad.EXACT: 1, Monad.RIGHT: 2, Monad.BINAD: 1}

_SUFFIX = {Monad.EXACT: "", Monad.LEFT: "-", Monad.RIGHT: "+", Monad.BINAD: "-+"}
_BOUND_RE = re.compile(r"(-?\d+(?:\.\d+)?(?:/\d+)?)(-\+|-|\+)?")


def to_fraction(x) -> Fraction:
    """Exact rational for ``x``; floats go through their shortest repr."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not degrees")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"standard part must be finite, got {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, Real):
        return to_fraction(float(x))
    raise TypeError(f"cannot interpret {x!r} as a real number")


def _monad_of(signs: frozenset) -> Monad:
    if signs == _SIGNS[Monad.EXACT]:
        return Monad.EXACT
    if signs == _SIGNS[Monad.LEFT]:
        return Monad.LEFT
    if signs == _SIGNS[Monad.RIGHT]:
        return Monad.RIGHT
    return Monad.BINAD


def _sign_sum(s1: frozenset, s2: frozenset) -> frozenset:
    # infinitesimals of independent magnitude: opposite signs can land anywhere
    if s1 == {0}:
        return s2
    if s2 == {0}:
        return s1
    if s1 == s2 and len(s1) == 1:
        return s1
    return _ALL_SIGNS


def _negate(signs: frozenset) -> frozenset:
    return frozenset(-s for s in signs)


@dataclass(frozen=True)
class NsBound:
    """A real standard part plus a monad tag."""

    standard_part: Fraction
    monad: Monad = Monad.EXACT

    def __post_init__(self):
        object.__setattr__(self, "standard_part", to_fraction(self.standard_part))
        if not isinstance(self.monad, Monad):
            raise TypeError(f"monad must be a Monad, got {self.monad!r}")

    @classmethod
    def coerce(cls, x) -> NsBound:
        return x if isinstance(x, NsBound) else cls(x)

    @classmethod
    def left(cls, x) -> NsBound:
        return cls(x, Monad.LEFT)

    @classmethod
    def right(cls, x) -> NsBound:
        return cls(x, Monad.RIGHT)

    @classmethod
    def binad(cls, x) -> NsBound:
        return cls(x, Monad.BINAD)

    @classmethod
    def parse(cls, text: str) -> NsBound:
        return parse_bound(text)

    @property
    def is_exact(self) -> bool:
        return self.monad is Monad.EXACT

    @property
    def sort_key(self) -> tuple:
        return (self.standard_part, _RANK[self.monad])

    def with_monad(self, monad: Monad) -> NsBound:
        return NsBound(self.standard_part, monad)

    def monads(self) -> tuple[NsBound, ...]:
        """The one-sided bounds this bound stands for (a binad splits in two)."""
        if self.monad is Monad.BINAD:
            return (self.with_monad(Monad.LEFT), self.with_monad(Monad.RIGHT))
        return (self,)

    def __add__(self, other):
        return ns_add(self, NsBound.coerce(other))

    def __radd__(self, other):
        return ns_add(NsBound.coerce(other), self)

    def __sub__(self, other):
        return ns_sub(self, NsBound.coerce(other))

    def __rsub__(self, other):
        return ns_sub(NsBound.coerce(other), self)

    def __mul__(self, other):
        return ns_mul(self, NsBound.coerce(other))

    def __rmul__(self, other):
        return ns_mul(NsBound.coerce(other), self)

    def __float__(self):
        return float(self.standard_part)

    def __str__(self):
        return format_number(self.standard_part) + _SUFFIX[self.monad]

    def __repr__(self):
        return f"NsBound({str(self)!r})"


def standard_part(a: NsBound) -> Fraction:
    return a.standard_part


def ns_add(a: NsBound, b: NsBound) -> NsBound:
    signs = _sign_sum(_SIGNS[a.monad], _SIGNS[b.monad])
    return NsBound(a.standard_part + b.standard_part, _monad_of(signs))


def ns_sub(a: NsBound, b: NsBound) -> NsBound:
    signs = _sign_sum(_SIGNS[a.monad], _negate(_SIGNS[b.monad]))
    return NsBound(a.standard_part - b.standard_part, _monad_of(signs))


def ns_mul(a: NsBound, b: NsBound) -> NsBound:
    """Product to first order: (a + da)(b + db) ~ ab + b*da + a*db.

    Only defined for non-negative standard parts.
    """
    if a.standard_part < 0 or b.standard_part < 0:
        raise NegativeOperand(f"cannot multiply {a} by {b}: negative standard part")
    term_a = _SIGNS[a.monad] if b.standard_part else _SIGNS[Monad.EXACT]
    term_b = _SIGNS[b.monad] if a.standard_part else _SIGNS[Monad.EXACT]
    signs = _sign_sum(term_a, term_b)
    return NsBound(a.standard_part * b.standard_part, _monad_of(signs))


def ns_cmp(a: NsBound, b: NsBound) -> Ordering:
    if a.standard_part != b.standard_part:
        return Ordering.LESS if a.standard_part < b.standard_part else Ordering.GREATER
    if a.monad is Monad.BINAD or b.monad is Monad.BINAD:
        return Ordering.INCOMPARABLE
    ra, rb = _RANK[a.monad], _RANK[b.monad]
    if ra == rb:
        return Ordering.EQUAL
    return Ordering.LESS if ra < rb else Ordering.GREATER


def is_successor(a: NsBound, b: NsBound) -> bool:
    """True when ``b`` immediately follows ``a``: nothing lies strictly between."""
    if a.monad is Monad.BINAD or b.monad is Monad.BINAD:
        return False
    return a.standard_part == b.standard_part and _RANK[b.monad] == _RANK[a.monad] + 1


def format_number(x: Fraction) -> str:
    """Exact decimal if the denominator allows it, else ``p/q``."""
    x = Fraction(x)
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{x.numerator}/{x.denominator}"
    places = max(twos, fives)
    sign = "-" if x < 0 else ""
    scaled = abs(x.numerator) * 10**places // x.denominator
    whole, frac = divmod(scaled, 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def parse_bound(text: str) -> NsBound:
    m = _BOUND_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"malformed bound {text!r}")
    number, suffix = m.groups()
    monad = {None: Monad.EXACT, "-": Monad.LEFT, "+": Monad.RIGHT, "-+": Monad.BINAD}[suffix]
    try:
        value = Fraction(number)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    return NsBound(value, monad)


ZERO = NsBound(0)
ONE = NsBound(1)
MINUS_ZERO = NsBound(0, Monad.LEFT)
ONE_PLUS = NsBound(1, Monad.RIGHT)
THREE_PLUS = NsBound(3, Monad.RIGHT)
