"""Sub-unitary sets: finite unions of intervals and isolated points.

Arithmetic is Minkowski-style: ``S1 + S2 = {s1 + s2}``, computed piece by
piece from interval endpoints and then re-normalized.  For positive sets
the endpoint rules are

    inf(S1 + S2) = inf S1 + inf S2      sup(S1 + S2) = sup S1 + sup S2
    inf(S1 - S2) = inf S1 - sup S2      sup(S1 - S2) = sup S1 - inf S2
    inf(S1 * S2) = inf S1 * inf S2      sup(S1 * S2) = sup S1 * sup S2

Open/closed flags propagate the usual interval-arithmetic way (an endpoint
built from an open end is open).  An interval endpoint needs a definite
side, so a binad produced at an endpoint is widened to its outer monad; binad
*points* are kept as they are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import DivisionByZero, EmptyOperand, EmptySet, MalformedInterval, ParseError
from .lexer import TokenStream
from .nonstd import (
    MINUS_ZERO,
    ONE_PLUS,
    ZERO,
    Monad,
    NsBound,
    Ordering,
    is_successor,
    ns_add,
    ns_cmp,
    ns_mul,
    ns_sub,
    parse_bound,
    to_fraction,
)

__all__ = [
    "Interval",
    "NsSet",
    "normalize",
    "set_add",
    "set_sub",
    "set_mul",
    "set_div_scalar",
    "set_inf",
    "set_sup",
    "clamp",
    "clamp_bound",
    "contains",
    "parse_set",
    "read_set",
    "UNIT",
]


@dataclass(frozen=True)
class Interval:
    lo: NsBound
    hi: NsBound
    lo_open: bool = False
    hi_open: bool = False

    def __str__(self):
        left = "]" if self.lo_open else "["
        right = "[" if self.hi_open else "]"
        return f"{left}{self.lo},{self.hi}{right}"


@dataclass(frozen=True)
class NsSet:
    """Canonical union of disjoint intervals and isolated points.

    Build instances with :func:`normalize` or the class helpers; the raw
    constructor trusts its arguments to already be canonical.
    """

    intervals: tuple[Interval, ...] = ()
    points: tuple[NsBound, ...] = ()

    @classmethod
    def of(cls, *items) -> NsSet:
        return normalize(items)

    @classmethod
    def point(cls, x) -> NsSet:
        return normalize([NsBound.coerce(x)])

    @classmethod
    def interval(cls, lo, hi, lo_open: bool = False, hi_open: bool = False) -> NsSet:
        return normalize([Interval(NsBound.coerce(lo), NsBound.coerce(hi), lo_open, hi_open)])

    @classmethod
    def coerce(cls, x) -> NsSet:
        return x if isinstance(x, NsSet) else cls.point(x)

    @classmethod
    def parse(cls, text: str) -> NsSet:
        return parse_set(text)

    @property
    def is_empty(self) -> bool:
        return not self.intervals and not self.points

    @property
    def is_exact(self) -> bool:
        """Every bound is an exact real (no monad tags)."""
        return all(b.is_exact for b in self.bounds())

    @property
    def single_point(self) -> NsBound | None:
        if not self.intervals and len(self.points) == 1:
            return self.points[0]
        return None

    def bounds(self):
        for iv in self.intervals:
            yield iv.lo
            yield iv.hi
        yield from self.points

    def pieces(self) -> list:
        """Intervals and points interleaved in ascending order."""
        items = [(iv.lo.sort_key, iv) for iv in self.intervals]
        items += [(p.sort_key, p) for p in self.points]
        return [item for _, item in sorted(items, key=lambda kv: kv[0])]

    def inf(self) -> NsBound:
        return set_inf(self)

    def sup(self) -> NsBound:
        return set_sup(self)

    def __contains__(self, x) -> bool:
        return contains(self, NsBound.coerce(x))

    def __add__(self, other):
        return set_add(self, NsSet.coerce(other))

    def __radd__(self, other):
        return set_add(NsSet.coerce(other), self)

    def __sub__(self, other):
        return set_sub(self, NsSet.coerce(other))

    def __rsub__(self, other):
        return set_sub(NsSet.coerce(other), self)

    def __mul__(self, other):
        return set_mul(self, NsSet.coerce(other))

    def __rmul__(self, other):
        return set_mul(NsSet.coerce(other), self)

    def __truediv__(self, k):
        return set_div_scalar(self, k)

    def __str__(self):
        if self.is_empty:
            return "{}"
        terms, run = [], []
        for piece in self.pieces():
            if isinstance(piece, NsBound):
                run.append(str(piece))
                continue
            if run:
                terms.append("{" + ", ".join(run) + "}")
                run = []
            terms.append(str(piece))
        if run:
            terms.append("{" + ", ".join(run) + "}")
        return " U ".join(terms)

    def __repr__(self):
        return f"NsSet({str(self)!r})"


# -- canonical form ---------------------------------------------------------

# internal piece: (lo, hi, lo_open, hi_open), never a binad at either end


def _key(b: NsBound):
    return b.sort_key


def _joins(cur, nxt) -> bool:
    c_hi, n_lo = _key(cur[1]), _key(nxt[0])
    if n_lo < c_hi:
        return True
    if n_lo == c_hi:
        return not (cur[3] and nxt[2])
    return is_successor(cur[1], nxt[0]) and not cur[3] and not nxt[2]


def _merge(cur, nxt):
    lo, lo_open = cur[0], cur[2]
    if _key(nxt[0]) == _key(lo):
        lo_open = lo_open and nxt[2]
    c_hi, n_hi = _key(cur[1]), _key(nxt[1])
    if n_hi > c_hi:
        hi, hi_open = nxt[1], nxt[3]
    elif n_hi < c_hi:
        hi, hi_open = cur[1], cur[3]
    else:
        hi, hi_open = cur[1], cur[3] and nxt[3]
    return (lo, hi, lo_open, hi_open)


def _raw_pieces(raw) -> list:
    pieces = []
    for item in raw:
        if isinstance(item, tuple):
            item = Interval(NsBound.coerce(item[0]), NsBound.coerce(item[1]), *item[2:])
        if isinstance(item, Interval):
            lo, hi = item.lo, item.hi
            if Monad.BINAD in (lo.monad, hi.monad):
                raise MalformedInterval(f"binad endpoint in {item}")
            order = ns_cmp(lo, hi)
            if order is Ordering.GREATER:
                raise MalformedInterval(f"lower bound exceeds upper bound in {item}")
            if order is Ordering.EQUAL and (item.lo_open or item.hi_open):
                # ]a,a[ is empty, but a monad holds many values, so ]a+,a+[ is not
                if lo.is_exact:
                    continue
                pieces.append((lo, hi, False, False))
            else:
                pieces.append((lo, hi, bool(item.lo_open), bool(item.hi_open)))
        else:
            for m in NsBound.coerce(item).monads():
                pieces.append((m, m, False, False))
    return pieces


def normalize(raw) -> NsSet:
    """Canonical NsSet from interval/point literals (any order, may overlap).

    Overlapping pieces merge, as do pieces that touch at a closed end or
    whose closed ends are immediate neighbours (``1`` and ``1+``).  A left
    and a right monad of the same real left isolated recombine into a binad.
    """
    pieces = sorted(_raw_pieces(raw), key=lambda p: (_key(p[0]), p[2]))
    merged = []
    for piece in pieces:
        if merged and _joins(merged[-1], piece):
            merged[-1] = _merge(merged[-1], piece)
        else:
            merged.append(piece)

    intervals = []
    points = []
    for lo, hi, lo_open, hi_open in merged:
        if _key(lo) == _key(hi):
            points.append(lo)
        else:
            intervals.append(Interval(lo, hi, lo_open, hi_open))

    combined = []
    for p in points:
        prev = combined[-1] if combined else None
        if (
            prev is not None
            and prev.monad is Monad.LEFT
            and p.monad is Monad.RIGHT
            and prev.standard_part == p.standard_part
        ):
            combined[-1] = p.with_monad(Monad.BINAD)
        else:
            combined.append(p)
    return NsSet(tuple(intervals), tuple(combined))


# -- queries ----------------------------------------------------------------


def set_inf(s: NsSet) -> NsBound:
    """Smallest bound of ``s``; open ends count, a binad contributes ``-c``."""
    if s.is_empty:
        raise EmptySet("inf of an empty set")
    candidates = [iv.lo for iv in s.intervals]
    candidates += [p.monads()[0] for p in s.points]
    return min(candidates, key=_key)


def set_sup(s: NsSet) -> NsBound:
    if s.is_empty:
        raise EmptySet("sup of an empty set")
    candidates = [iv.hi for iv in s.intervals]
    candidates += [p.monads()[-1] for p in s.points]
    return max(candidates, key=_key)


def contains(s: NsSet, x: NsBound) -> bool:
    if x.monad is Monad.BINAD:
        return all(contains(s, m) for m in x.monads())
    for p in s.points:
        if x == p or x in p.monads():
            return True
    k = _key(x)
    for iv in s.intervals:
        lo, hi = _key(iv.lo), _key(iv.hi)
        above = lo < k or (lo == k and not iv.lo_open)
        below = k < hi or (k == hi and not iv.hi_open)
        if above and below:
            return True
    return False


# -- arithmetic -------------------------------------------------------------


def _widen_lo(b: NsBound) -> NsBound:
    return b.with_monad(Monad.LEFT) if b.monad is Monad.BINAD else b


def _widen_hi(b: NsBound) -> NsBound:
    return b.with_monad(Monad.RIGHT) if b.monad is Monad.BINAD else b


def _arith_pieces(s: NsSet) -> list:
    out = [(iv.lo, iv.hi, iv.lo_open, iv.hi_open) for iv in s.intervals]
    for p in s.points:
        out += [(m, m, False, False) for m in p.monads()]
    return out


def _is_point(piece) -> bool:
    return piece[0] == piece[1] and not piece[2] and not piece[3]


def _combine(s1: NsSet, s2: NsSet, point_op, interval_op) -> NsSet:
    if s1.is_empty or s2.is_empty:
        raise EmptyOperand("set arithmetic needs nonempty operands")
    out = []
    for a, b in product(_arith_pieces(s1), _arith_pieces(s2)):
        if _is_point(a) and _is_point(b):
            out.append(point_op(a[0], b[0]))
        else:
            out.append(interval_op(a, b))
    return normalize(out)


def _interval(lo, hi, lo_open, hi_open) -> Interval:
    return Interval(_widen_lo(lo), _widen_hi(hi), lo_open, hi_open)


def _add_pieces(a, b):
    return _interval(ns_add(a[0], b[0]), ns_add(a[1], b[1]), a[2] or b[2], a[3] or b[3])


def _sub_pieces(a, b):
    return _interval(ns_sub(a[0], b[1]), ns_sub(a[1], b[0]), a[2] or b[3], a[3] or b[2])


def _corner(x, x_open, y, y_open):
    # an attained exact zero factor pins the product at an attained 0
    pinned = (x == ZERO and not x_open) or (y == ZERO and not y_open)
    return ns_mul(x, y), (x_open or y_open) and not pinned


def _pick(candidates, widen, choose):
    widened = [(widen(v), o) for v, o in candidates]
    best = choose(_key(v) for v, _ in widened)
    ties = [o for v, o in widened if _key(v) == best]
    value = next(v for v, _ in widened if _key(v) == best)
    return value, all(ties)


def _mul_pieces(a, b):
    corners = [
        _corner(a[0], a[2], b[0], b[2]),
        _corner(a[0], a[2], b[1], b[3]),
        _corner(a[1], a[3], b[0], b[2]),
        _corner(a[1], a[3], b[1], b[3]),
    ]
    lo, lo_open = _pick(corners, _widen_lo, min)
    hi, hi_open = _pick(corners, _widen_hi, max)
    return Interval(lo, hi, lo_open, hi_open)


def set_add(s1: NsSet, s2: NsSet) -> NsSet:
    return _combine(s1, s2, ns_add, _add_pieces)


def set_sub(s1: NsSet, s2: NsSet) -> NsSet:
    """Minkowski difference.  The result may leave [0, 1]; see :func:`clamp`."""
    return _combine(s1, s2, ns_sub, _sub_pieces)


def set_mul(s1: NsSet, s2: NsSet) -> NsSet:
    """Minkowski product of sets with non-negative standard parts.

    Multiplying by ``{1+}`` is a genuine product, so tags propagate
    (``1+ * 0.5 = 0.5+``) rather than acting as the identity.
    """
    return _combine(s1, s2, ns_mul, _mul_pieces)


def _scale(b: NsBound, k: Fraction) -> NsBound:
    monad = b.monad
    if k < 0 and monad in (Monad.LEFT, Monad.RIGHT):
        monad = Monad.RIGHT if monad is Monad.LEFT else Monad.LEFT
    return NsBound(b.standard_part / k, monad)


def set_div_scalar(s: NsSet, k) -> NsSet:
    k = to_fraction(k)
    if k == 0:
        raise DivisionByZero("division of a set by zero")
    if s.is_empty:
        raise EmptyOperand("division of an empty set")
    out = [_scale(p, k) for p in s.points]
    for iv in s.intervals:
        lo, hi = _scale(iv.lo, k), _scale(iv.hi, k)
        if k > 0:
            out.append(Interval(lo, hi, iv.lo_open, iv.hi_open))
        else:
            out.append(Interval(hi, lo, iv.hi_open, iv.lo_open))
    return normalize(out)


# -- clamping ---------------------------------------------------------------


def clamp_bound(b: NsBound) -> NsBound:
    if b.standard_part < 0:
        return MINUS_ZERO
    if b.standard_part > 1:
        return ONE_PLUS
    return b


def clamp(s: NsSet) -> NsSet:
    """Map everything below 0 to ``-0`` and everything above 1 to ``1+``.

    Values are replaced, not dropped, so out-of-range mass survives as the
    corresponding non-standard border.
    """
    out = [clamp_bound(p) for p in s.points]
    for iv in s.intervals:
        if iv.lo.standard_part < 0:
            out.append(MINUS_ZERO)
        if iv.hi.standard_part > 1:
            out.append(ONE_PLUS)
        lo, lo_open = (iv.lo, iv.lo_open) if _key(iv.lo) >= _key(MINUS_ZERO) else (MINUS_ZERO, False)
        hi, hi_open = (iv.hi, iv.hi_open) if _key(iv.hi) <= _key(ONE_PLUS) else (ONE_PLUS, False)
        if _key(lo) < _key(hi) or (_key(lo) == _key(hi) and not (lo_open or hi_open)):
            out.append(Interval(lo, hi, lo_open, hi_open))
    return normalize(out)


# -- text form --------------------------------------------------------------


def _read_bound(stream: TokenStream) -> NsBound:
    tok = stream.expect("BOUND")
    try:
        return parse_bound(tok.text)
    except ValueError as exc:
        raise ParseError(str(exc), tok.line, tok.column) from None


def _read_term(stream: TokenStream) -> list:
    if stream.accept("{"):
        items = [_read_bound(stream)]
        while stream.accept(","):
            items.append(_read_bound(stream))
        stream.expect("}")
        return items
    start = stream.peek()
    opener = stream.expect("[", "]")
    lo = _read_bound(stream)
    stream.expect(",")
    hi = _read_bound(stream)
    closer = stream.expect("]", "[")
    interval = Interval(lo, hi, opener.text == "]", closer.text == "[")
    if Monad.BINAD in (lo.monad, hi.monad):
        raise ParseError("binad bounds cannot be interval endpoints", start.line, start.column)
    if ns_cmp(lo, hi) is Ordering.GREATER:
        raise ParseError(f"malformed interval {interval}", start.line, start.column)
    return [interval]


def read_set(stream: TokenStream) -> NsSet:
    """Parse ``term ('U' term)*`` from a token stream."""
    items = _read_term(stream)
    while stream.at("IDENT") and stream.peek().text == "U":
        stream.next()
        items += _read_term(stream)
    return normalize(items)


def parse_set(text: str) -> NsSet:
    stream = TokenStream(text)
    result = read_set(stream)
    stream.expect("EOF")
    return result


UNIT = NsSet((Interval(MINUS_ZERO, ONE_PLUS),), ())
