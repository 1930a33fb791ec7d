"""Place a truth value among the Boolean, fuzzy, intuitionistic and paraconsistent logics.

For single-point values ``(t, i, f)`` with ``n = t + i + f``:

=========================  ======================================
flag                       condition
=========================  ======================================
Fuzzy                      n = 1 and i = 0
Boolean                    Fuzzy, with t and f each 0 or 1
IntuitionisticIncomplete   0 < n < 1 and i = 0
IFL                        n = 1
MultiValued                0 <= t, i, f <= 1
Paraconsistent             n > 1, i = 0, t < 1 and f < 1
Dialetheist                t = f = 1 and i = 0
Faillibilist               i > 0
ParadoxForm                t = f = 1 (any indeterminacy)
=========================  ======================================

The conditions overlap on purpose; they are reported as independent flags.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRange
from .logic import NLValue
from .nonstd import ONE, ONE_PLUS, NsBound, Ordering, ns_add, ns_cmp, to_fraction
from .nsset import NsSet

__all__ = [
    "Flag",
    "LogicClass",
    "TruthGrade",
    "IFSResult",
    "classify",
    "truth_grade",
    "ifs_check",
    "ivifs_check",
    "ifs2_check",
    "TOLERANCE",
]

TOLERANCE = Fraction(1, 10**12)


class Flag(enum.Enum):
    BOOLEAN = "Boolean"
    FUZZY = "Fuzzy"
    INTUITIONISTIC_INCOMPLETE = "IntuitionisticIncomplete"
    IFL = "IFL"
    MULTI_VALUED = "MultiValued"
    PARACONSISTENT = "Paraconsistent"
    DIALETHEIST = "Dialetheist"
    FAILLIBILIST = "Faillibilist"
    PARADOX_FORM = "ParadoxForm"


class TruthGrade(enum.Enum):
    ABSOLUTE_TRUTH = "AbsoluteTruth"
    RELATIVE_TRUTH = "RelativeTruth"
    ABSOLUTE_FALSEHOOD = "AbsoluteFalsehood"
    RELATIVE_FALSEHOOD = "RelativeFalsehood"
    NONE = "None"


@dataclass(frozen=True)
class LogicClass:
    singleton: bool
    n: Fraction | None
    flags: frozenset[Flag]

    def __contains__(self, flag: Flag) -> bool:
        return flag in self.flags

    def flag_names(self) -> list[str]:
        return sorted(f.value for f in self.flags)


def _cmp(x: NsBound, c) -> Ordering:
    """Compare against an exact threshold; exact values get a 1e-12 tolerance."""
    c = NsBound(c)
    if x.is_exact and abs(x.standard_part - c.standard_part) <= TOLERANCE:
        return Ordering.EQUAL
    return ns_cmp(x, c)


def _eq(x, c) -> bool:
    return _cmp(x, c) is Ordering.EQUAL


def _lt(x, c) -> bool:
    return _cmp(x, c) is Ordering.LESS


def _gt(x, c) -> bool:
    return _cmp(x, c) is Ordering.GREATER


def _in_unit(x: NsBound) -> bool:
    return not _lt(x, 0) and not _gt(x, 1)


def _singleton_flags(t: NsBound, i: NsBound, f: NsBound) -> set[Flag]:
    n = ns_add(ns_add(t, i), f)
    i_zero = _eq(i, 0)
    flags = set()
    if _eq(n, 1):
        flags.add(Flag.IFL)
        if i_zero:
            flags.add(Flag.FUZZY)
            if all(_eq(x, 0) or _eq(x, 1) for x in (t, f)):
                flags.add(Flag.BOOLEAN)
    if i_zero and _gt(n, 0) and _lt(n, 1):
        flags.add(Flag.INTUITIONISTIC_INCOMPLETE)
    if all(_in_unit(x) for x in (t, i, f)):
        flags.add(Flag.MULTI_VALUED)
    if i_zero and _gt(n, 1) and _lt(t, 1) and _lt(f, 1):
        flags.add(Flag.PARACONSISTENT)
    if _eq(t, 1) and _eq(f, 1):
        flags.add(Flag.PARADOX_FORM)
        if i_zero:
            flags.add(Flag.DIALETHEIST)
    if _gt(i, 0):
        flags.add(Flag.FAILLIBILIST)
    return flags


def _set_flags(v: NLValue) -> set[Flag]:
    flags = set()
    if all(_in_unit(s.inf()) and _in_unit(s.sup()) for s in v.components()):
        flags.add(Flag.MULTI_VALUED)
    if _gt(v.I.inf(), 0):
        flags.add(Flag.FAILLIBILIST)
    t, f = v.T.single_point, v.F.single_point
    if t is not None and f is not None and _eq(t, 1) and _eq(f, 1):
        flags.add(Flag.PARADOX_FORM)
    return flags


def classify(v: NLValue) -> LogicClass:
    """Flag the logics ``v`` reduces to.

    Values whose components are all single (non-binad) points get the full
    table above; ``n`` is reported only when they are also exact.  Any other
    value gets set-level flags only: MultiValued (everything inside [0, 1]),
    Faillibilist (inf I > 0) and ParadoxForm (T = F = {1}).
    """
    points = [s.single_point for s in v.components()]
    if all(p is not None and len(p.monads()) == 1 for p in points):
        t, i, f = points
        n = t.standard_part + i.standard_part + f.standard_part if all(p.is_exact for p in points) else None
        return LogicClass(True, n, frozenset(_singleton_flags(t, i, f)))
    return LogicClass(False, None, frozenset(_set_flags(v)))


def truth_grade(v: NLValue) -> TruthGrade:
    """Absolute (``{1+}``) or relative (``{1}``) truth, then falsehood."""
    if v.T == NsSet.point(ONE_PLUS):
        return TruthGrade.ABSOLUTE_TRUTH
    if v.T == NsSet.point(ONE):
        return TruthGrade.RELATIVE_TRUTH
    if v.F == NsSet.point(ONE_PLUS):
        return TruthGrade.ABSOLUTE_FALSEHOOD
    if v.F == NsSet.point(ONE):
        return TruthGrade.RELATIVE_FALSEHOOD
    return TruthGrade.NONE


# -- Atanassov-family membership constraints --------------------------------


@dataclass(frozen=True)
class IFSResult:
    accepted: bool
    indeterminacy: Fraction | None


def _degree(x, name: str) -> Fraction:
    x = to_fraction(x)
    if not 0 <= x <= 1:
        raise OutOfRange(f"{name}={x} is outside [0, 1]")
    return x


def ifs_check(m, n) -> IFSResult:
    """Intuitionistic fuzzy set pair: accepted iff ``m + n <= 1``.

    The slack ``1 - m - n`` is the indeterminacy; it is 0 for a plain fuzzy
    set.
    """
    m, n = _degree(m, "m"), _degree(n, "n")
    if m + n <= 1:
        return IFSResult(True, 1 - m - n)
    return IFSResult(False, None)


def _exact_unit_set(s: NsSet, name: str) -> NsSet:
    if s.is_empty or not s.is_exact:
        raise OutOfRange(f"{name} must be a nonempty set with exact bounds")
    if s.inf().standard_part < 0 or s.sup().standard_part > 1:
        raise OutOfRange(f"{name}={s} is not inside [0, 1]")
    return s


def ivifs_check(m: NsSet, n: NsSet) -> bool:
    m, n = _exact_unit_set(m, "m"), _exact_unit_set(n, "n")
    return m.sup().standard_part + n.sup().standard_part <= 1


def ifs2_check(m, n) -> bool:
    m, n = _degree(m, "m"), _degree(n, "n")
    return m * m + n * n <= 1

