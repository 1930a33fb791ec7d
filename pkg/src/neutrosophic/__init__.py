"""Neutrosophic logic with set-valued truth components.

Modules, bottom up:

- ``nonstd``: real bounds tagged with a left/right monad or binad
- ``nsset``: unions of intervals and points over those bounds
- ``logic``: truth values ``(T, I, F)``, connectives, expression evaluation
- ``taxonomy``: which classical, fuzzy or intuitionistic logic a value falls in
- ``dsl`` / ``cli``: the batch program language and the ``nlcalc`` runner
"""

from .logic import ConstantMode, EvalConfig, NLValue, evaluate
from .nonstd import NsBound
from .nsset import NsSet
from .taxonomy import classify, truth_grade

__all__ = [
    "ConstantMode",
    "EvalConfig",
    "NLValue",
    "NsBound",
    "NsSet",
    "classify",
    "evaluate",
    "truth_grade",
]
