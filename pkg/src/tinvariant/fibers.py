"""Singular fibers: A/B words, mod-5 classes and their contribution vectors.

A fiber pair (alpha, beta) is written as a word in

    A: (x, y) -> (x, x + y)        B: (x, y) -> (x + y, y)

applied to the seed (1, 1).  Reading the word from the seed outwards, the
first letter glues onto the polyhedron E and every later letter onto a copy of
J; letter A glues by the permutation (23) and B by (13).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InconsistencyError
from .golden import EPS, ONE, ZERO, GoldenNum, eps_pow
from .tensors import (
    PHI_13,
    PHI_23,
    PHI_E,
    PHI_J,
    Vec5,
    mat_mul,
    mat_vec,
    orbit_closure,
    squared_distance,
)

__all__ = [
    "FiberClass",
    "ALL_CLASSES",
    "fiber_word",
    "apply_word",
    "fiber_vector",
    "class_of",
    "class_vector",
    "class_representative",
    "labeled_orbit",
    "pair_geometry",
    "distance_tiers",
    "trapezoids",
    "PRINTED_ORBIT",
    "printed_correspondence",
]

_PERM = {"A": PHI_23, "B": PHI_13}


@dataclass(frozen=True, order=True)
class FiberClass:
    """A pair in (Z5 x Z5 minus 0) modulo negation, stored in canonical form."""

    lam: int
    mu: int

    def __post_init__(self):
        if not (0 <= self.lam < 5 and 0 <= self.mu < 5):
            raise DomainError(f"class components must lie in 0..4, got ({self.lam},{self.mu})")
        if (self.lam, self.mu) == (0, 0):
            raise DomainError("the zero pair is not a fiber class")
        neg = ((-self.lam) % 5, (-self.mu) % 5)
        if neg < (self.lam, self.mu):
            raise DomainError(f"({self.lam},{self.mu}) is not canonical; use class_of")

    def doubled(self) -> FiberClass:
        return class_of(2 * self.lam, 2 * self.mu)

    def __str__(self):
        return f"±({self.lam},{self.mu})"


def class_of(alpha: int, beta: int) -> FiberClass:
    a, b = alpha % 5, beta % 5
    if (a, b) == (0, 0):
        raise DomainError(f"fiber ({alpha},{beta}) reduces to (0,0) mod 5")
    return FiberClass(*min((a, b), ((-a) % 5, (-b) % 5)))


ALL_CLASSES: tuple[FiberClass, ...] = tuple(
    sorted({class_of(a, b) for a in range(5) for b in range(5) if (a, b) != (0, 0)})
)


def fiber_word(alpha: int, beta: int) -> tuple[str, ...]:
    """Letters in application order to the seed (1, 1).

    >>> fiber_word(5, 2)
    ('A', 'B', 'B')
    """
    if alpha < 1 or beta < 1:
        raise DomainError(f"fiber word needs positive entries, got ({alpha},{beta})")
    if math.gcd(alpha, beta) != 1:
        raise DomainError(f"fiber ({alpha},{beta}) is not coprime")
    letters = []
    a, b = alpha, beta
    while (a, b) != (1, 1):
        if a > b:
            # bulk subtraction keeps long runs of one letter cheap
            n = (a - 1) // b if b == 1 else a // b
            letters.extend("B" * n)
            a -= n * b
        else:
            n = (b - 1) // a if a == 1 else b // a
            letters.extend("A" * n)
            b -= n * a
    return tuple(reversed(letters))


def apply_word(word, start: tuple[int, int] = (1, 1)) -> tuple[int, int]:
    x, y = start
    for letter in word:
        if letter == "A":
            y = x + y
        elif letter == "B":
            x = x + y
        else:
            raise DomainError(f"unknown letter {letter!r}")
    return x, y


@lru_cache(maxsize=None)
def _step_matrices():
    return {k: mat_mul(p, PHI_J) for k, p in _PERM.items()}


def word_vector(word, *, e_innermost: bool = True) -> Vec5:
    """Vector of a non-empty word.

    With ``e_innermost`` (the default) the first letter applied to the seed
    pastes onto E; otherwise the last one does.
    """
    if not word:
        raise DomainError("empty word has no pasting; use class_vector")
    letters = list(word) if e_innermost else list(reversed(word))
    steps = _step_matrices()
    v = mat_vec(_PERM[letters[0]], PHI_E)
    for letter in letters[1:]:
        v = mat_vec(steps[letter], v)
    return v


def fiber_vector(alpha: int, beta: int) -> Vec5:
    word = fiber_word(alpha, beta)
    if not word:
        # (1, 1) is a regular fiber; its class vector stands in for the pasting
        return class_vector(class_of(1, 1))
    return word_vector(word)


@lru_cache(maxsize=None)
def _class_table() -> dict[FiberClass, tuple[tuple[int, int], Vec5]]:
    table: dict[FiberClass, tuple[tuple[int, int], Vec5]] = {}
    for alpha in itertools.count(1):
        for beta in range(1, 5 * alpha + 6):
            if math.gcd(alpha, beta) != 1 or (alpha, beta) == (1, 1):
                continue
            c = class_of(alpha, beta)
            if c not in table:
                table[c] = ((alpha, beta), word_vector(fiber_word(alpha, beta)))
        if len(table) == len(ALL_CLASSES):
            return dict(sorted(table.items()))
        if alpha > 50:
            raise InconsistencyError("could not find representatives for every class")


def class_representative(c: FiberClass) -> tuple[int, int]:
    """Smallest positive coprime pair of the class (lexicographic) with a non-empty word."""
    return _class_table()[c][0]


def class_vector(c: FiberClass) -> Vec5:
    return _class_table()[c][1]


@lru_cache(maxsize=None)
def labeled_orbit() -> dict[FiberClass, Vec5]:
    """The 12 orbit vectors keyed by class; checked against the generator closure."""
    labeled = {c: vec for c, (_, vec) in _class_table().items()}
    closure = orbit_closure()
    if len(closure) != 12 or set(closure) != set(labeled.values()):
        raise InconsistencyError("labeled class vectors differ from the generator closure")
    if len(set(labeled.values())) != 12:
        raise InconsistencyError("two fiber classes share a vector")
    return labeled


# --- geometry of the 12 vectors -------------------------------------------

def det_mod5(c1: FiberClass, c2: FiberClass) -> int:
    return (c1.lam * c2.mu - c2.lam * c1.mu) % 5


@lru_cache(maxsize=None)
def distance_tiers() -> dict[GoldenNum, str]:
    """Map each distinct squared distance between orbit vectors to its tier name."""
    orbit = labeled_orbit()
    values = {squared_distance(orbit[c1], orbit[c2]) for c1, c2 in itertools.combinations(orbit, 2)}
    if len(values) != 3:
        raise InconsistencyError(f"expected 3 distinct distances, found {len(values)}")
    names = ("min", "medial", "max")
    return {v: name for v, name in zip(sorted(values, key=float), names)}


def pair_geometry(c1: FiberClass, c2: FiberClass) -> tuple[int, str]:
    """Return (determinant of the class labels mod 5, distance tier) for two classes."""
    if c1 == c2:
        raise DomainError("pair_geometry needs two distinct classes")
    orbit = labeled_orbit()
    d2 = squared_distance(orbit[c1], orbit[c2])
    return det_mod5(c1, c2), distance_tiers()[d2]


def antipodal_sums() -> dict[FiberClass, Vec5]:
    """v(c) + v(2c) for each class."""
    orbit = labeled_orbit()
    return {c: tuple(x + y for x, y in zip(orbit[c], orbit[c.doubled()])) for c in orbit}


def trapezoids() -> list[tuple[FiberClass, FiberClass, FiberClass, FiberClass]]:
    """All ordered quadruples of distinct classes with v1 - v2 = e * (v3 - v4)."""
    orbit = labeled_orbit()
    found = []
    diffs = {
        (c1, c2): tuple(x - y for x, y in zip(orbit[c1], orbit[c2]))
        for c1, c2 in itertools.permutations(orbit, 2)
    }
    scaled = {k: tuple(EPS * x for x in v) for k, v in diffs.items()}
    by_scaled: dict[tuple, list] = {}
    for k, v in scaled.items():
        by_scaled.setdefault(v, []).append(k)
    for (c1, c2), d in diffs.items():
        for c3, c4 in by_scaled.get(d, ()):
            if len({c1, c2, c3, c4}) == 4:
                found.append((c1, c2, c3, c4))
    return sorted(found)


# --- the printed list of 12 vectors and its stated class correspondence ----

_EH, _EMH, _EM1, _EM3H = eps_pow(1), eps_pow(-1), eps_pow(-2), eps_pow(-3)
_1, _0 = ONE, ZERO

PRINTED_ORBIT: tuple[tuple[tuple[int, int], Vec5], ...] = (
    ((1, 1), (_1, _0, _0, EPS, _0)),
    ((1, 0), (_1, _0, EPS, _0, _0)),
    ((0, 1), (_1, EPS, _0, _0, _0)),
    ((1, 2), (_1, _0, _1, _0, _EH)),
    ((2, 1), (_1, _1, _0, _0, _EH)),
    ((1, -1), (_1, _0, _0, _1, _EH)),
    ((1, -2), (_1, _0, _1, _1, -_EMH)),
    ((2, -1), (_1, _1, _0, _1, -_EMH)),
    ((2, -2), (_1, _1, _1, _0, -_EMH)),
    ((2, 0), (_1, _1, -_EM1, _1, _EM3H)),
    ((0, 2), (_1, -_EM1, _1, _1, _EM3H)),
    ((2, 2), (_1, _1, _1, -_EM1, _EM3H)),
)


def printed_correspondence() -> list[dict]:
    """Compare the printed class for each listed vector with the derived one."""
    derived = {v: c for c, v in labeled_orbit().items()}
    rows = []
    for pair, vec in PRINTED_ORBIT:
        printed = class_of(*pair)
        got = derived.get(vec)
        rows.append(
            {
                "printed_class": str(printed),
                "derived_class": str(got) if got else None,
                "match": got == printed,
            }
        )
    return rows
