"""Constant matrices of the elementary polyhedra and their contractions.

Every index runs over the five simple subgraphs of a theta-curve with numbered
edges, in this fixed order (0-based here):

    0  empty subgraph
    1  theta-curve without edge 1
    2  theta-curve without edge 2
    3  theta-curve without edge 3
    4  the whole theta-curve

``Vec5`` is a tuple of 5 GoldenNums, ``Mat5`` a tuple of 5 rows and ``Cubic5``
a tuple of 5 ``Mat5`` slices, so ``t[i][j][k]`` is entry (i, j, k).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple

from .errors import InconsistencyError
from .golden import ONE, ZERO, GoldenNum, eps_pow

__all__ = [
    "SUBGRAPHS",
    "Constants",
    "constants",
    "mat_vec",
    "mat_mul",
    "contract3",
    "orbit_closure",
    "generators",
    "squared_distance",
    "is_symmetric3",
]

Vec5 = tuple[GoldenNum, ...]
Mat5 = tuple[Vec5, ...]
Cubic5 = tuple[Mat5, ...]

SUBGRAPHS = ("empty", "theta-1", "theta-2", "theta-3", "theta")

_0, _1 = ZERO, ONE
_EM1 = eps_pow(-2)  # e^-1
_EM2 = eps_pow(-4)  # e^-2
_EMH = eps_pow(-1)  # e^-1/2
_EM3H = eps_pow(-3)  # e^-3/2
_EM7H = eps_pow(-7)  # e^-7/2

PHI_E: Vec5 = (_1, _0, _0, _1, eps_pow(1))

PHI_J: Mat5 = (
    (_1, _0, _0, _0, _0),
    (_0, _1, _0, _0, _0),
    (_0, _0, _1, _0, _0),
    (_0, _0, _0, _EM1, _EMH),
    (_0, _0, _0, _EMH, -_EM1),
)

_ZROW = (_0,) * 5

# five square slices, first index fixed
PHI_T: Cubic5 = (
    (
        (_1, _0, _0, _0, _0),
        (_0, _1, _0, _0, _0),
        _ZROW,
        _ZROW,
        _ZROW,
    ),
    (
        (_0, _1, _0, _0, _0),
        (_1, _1, _0, _0, _0),
        _ZROW,
        _ZROW,
        _ZROW,
    ),
    (
        _ZROW,
        _ZROW,
        (_0, _0, _0, _EM1, _0),
        (_0, _0, _EM1, _0, _0),
        (_0, _0, _0, _0, _EM1),
    ),
    (
        _ZROW,
        _ZROW,
        (_0, _0, _EM1, _0, _0),
        (_0, _0, _0, _EM2, _EM3H),
        (_0, _0, _0, _EM3H, -_EM2),
    ),
    (
        _ZROW,
        _ZROW,
        (_0, _0, _0, _0, _EM1),
        (_0, _0, _0, _EM3H, -_EM2),
        (_0, _0, _EM1, -_EM2, -_EM7H),
    ),
)

# gluing (23) swaps "theta-2" and "theta-3"; gluing (13) swaps "theta-1" and "theta-3"
PHI_23: Mat5 = (
    (_1, _0, _0, _0, _0),
    (_0, _1, _0, _0, _0),
    (_0, _0, _0, _1, _0),
    (_0, _0, _1, _0, _0),
    (_0, _0, _0, _0, _1),
)

PHI_13: Mat5 = (
    (_1, _0, _0, _0, _0),
    (_0, _0, _0, _1, _0),
    (_0, _0, _1, _0, _0),
    (_0, _1, _0, _0, _0),
    (_0, _0, _0, _0, _1),
)


class Constants(NamedTuple):
    phi_E: Vec5
    phi_J: Mat5
    phi_T: Cubic5
    phi_23: Mat5
    phi_13: Mat5


def constants() -> Constants:
    return Constants(PHI_E, PHI_J, PHI_T, PHI_23, PHI_13)


def mat_vec(m: Mat5, v: Vec5) -> Vec5:
    out = []
    for row in m:
        acc = ZERO
        for m_ij, v_j in zip(row, v):
            if m_ij and v_j:
                acc = acc + m_ij * v_j
        out.append(acc)
    return tuple(out)


def mat_mul(m: Mat5, n: Mat5) -> Mat5:
    cols = tuple(zip(*n))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in cols) for row in m)


def _nonzero_entries(t: Cubic5):
    return [
        (i, j, k, t[i][j][k])
        for i, j, k in itertools.product(range(5), repeat=3)
        if t[i][j][k]
    ]


@lru_cache(maxsize=None)
def _sparse_phi_t():
    return tuple(_nonzero_entries(PHI_T))


def contract3(t: Cubic5, v1: Vec5, v2: Vec5, v3: Vec5) -> GoldenNum:
    """Full contraction sum_{ijk} t[i][j][k] v1[i] v2[j] v3[k]."""
    entries = _sparse_phi_t() if t is PHI_T else _nonzero_entries(t)
    total = ZERO
    for i, j, k, x in entries:
        if v1[i] and v2[j] and v3[k]:
            total = total + x * v1[i] * v2[j] * v3[k]
    return total


def is_symmetric3(t: Cubic5) -> bool:
    for i, j, k in itertools.product(range(5), repeat=3):
        x = t[i][j][k]
        for p, q, r in itertools.permutations((i, j, k)):
            if t[p][q][r] != x:
                return False
    return True


@lru_cache(maxsize=None)
def _generators() -> dict[str, Mat5]:
    return {"A": mat_mul(PHI_23, PHI_J), "B": mat_mul(PHI_13, PHI_J)}


def _sparse_rows(m: Mat5):
    return tuple(tuple((j, x) for j, x in enumerate(row) if x) for row in m)


@lru_cache(maxsize=None)
def _sparse_generators():
    return tuple(_sparse_rows(g) for g in _generators().values())


def _apply_sparse(rows, v: Vec5) -> Vec5:
    out = []
    for row in rows:
        terms = [x * v[j] for j, x in row if v[j]]
        if not terms:
            out.append(ZERO)
            continue
        acc = terms[0]
        for t in terms[1:]:
            acc = acc + t
        out.append(acc)
    return tuple(out)


def generators() -> dict[str, Mat5]:
    """The two step matrices: letter A -> PHI_23 @ PHI_J, letter B -> PHI_13 @ PHI_J."""
    return dict(_generators())


def orbit_closure(max_size: int = 12, max_rounds: int = 64) -> list[Vec5]:
    """Close the seeds PHI_23 @ PHI_E, PHI_13 @ PHI_E under both step matrices.

    Raises InconsistencyError if the closure grows past ``max_size`` vectors or
    does not stabilise within ``max_rounds`` breadth-first rounds.
    """
    gens = _sparse_generators()
    found = [_apply_sparse(_sparse_rows(PHI_23), PHI_E), _apply_sparse(_sparse_rows(PHI_13), PHI_E)]
    seen = set(found)
    frontier = list(found)
    for _ in range(max_rounds):
        nxt = []
        for v in frontier:
            for g in gens:
                w = _apply_sparse(g, v)
                if w not in seen:
                    seen.add(w)
                    found.append(w)
                    nxt.append(w)
        if len(found) > max_size:
            raise InconsistencyError(f"orbit exceeded {max_size} vectors")
        if not nxt:
            return found
        frontier = nxt
    raise InconsistencyError(f"orbit did not stabilise within {max_rounds} rounds")


def squared_distance(u: Vec5, v: Vec5) -> GoldenNum:
    total = ZERO
    for x, y in zip(u, v):
        diff = x - y
        total = total + diff * diff
    return total
