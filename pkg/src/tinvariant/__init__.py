"""Exact t-invariant (order-5 Turaev-Viro, integer colors) of small Seifert manifolds."""

from .closed_form import lens_t, reconcile, t_closed
from .errors import DomainError, InconsistencyError
from .fibers import FiberClass, class_of, fiber_vector, fiber_word
from .golden import GoldenNum, eps_pow, to_real
from .seifert import (
    AbelianGroup,
    SeifertPresentation,
    h1,
    normalize,
    parse_presentation,
    sweep_all_classes,
    t_invariant,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "DomainError",
    "FiberClass",
    "GoldenNum",
    "InconsistencyError",
    "SeifertPresentation",
    "class_of",
    "eps_pow",
    "fiber_vector",
    "fiber_word",
    "h1",
    "lens_t",
    "normalize",
    "parse_presentation",
    "reconcile",
    "sweep_all_classes",
    "t_closed",
    "t_invariant",
    "to_real",
]
