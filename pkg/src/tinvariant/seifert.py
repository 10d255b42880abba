"""Seifert presentations over S^2 with three fibers, homology and the tensor route.

A presentation ``(b; (a1, b1), (a2, b2), (a3, b3))`` stands for the manifold
``(b, (O1, 0), (a1, b1), (a2, b2), (a3, b3))``.  Fibers with alpha = 1 or
alpha = 0 are allowed and give lens spaces and connected sums of lens spaces.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .fibers import ALL_CLASSES, FiberClass, class_of, class_vector
from .golden import GoldenNum
from .tensors import PHI_T, contract3

__all__ = [
    "SeifertPresentation",
    "AbelianGroup",
    "LensParams",
    "normalize",
    "euler_number",
    "fiber_classes",
    "t_invariant",
    "t_of_classes",
    "lens_reduce",
    "lens_presentation",
    "ext_gcd",
    "smith_normal_form",
    "h1",
    "sweep_all_classes",
    "random_presentation",
    "parse_presentation",
    "ParseError",
]

Fiber = tuple[int, int]


@dataclass(frozen=True)
class SeifertPresentation:
    b: int
    fibers: tuple[Fiber, Fiber, Fiber]

    def __post_init__(self):
        fibers = tuple(tuple(int(x) for x in f) for f in self.fibers)
        if len(fibers) != 3 or any(len(f) != 2 for f in fibers):
            raise DomainError("a presentation needs exactly three (alpha, beta) fibers")
        for i, (a, b) in enumerate(fibers, 1):
            if math.gcd(a, b) != 1:
                raise DomainError(f"fiber {i} not coprime: ({a},{b})")
        object.__setattr__(self, "fibers", fibers)

    def __str__(self):
        return f"{self.b}; " + " ".join(f"({a},{b})" for a, b in self.fibers)

    def to_json(self) -> dict:
        return {"b": self.b, "fibers": [list(f) for f in self.fibers]}


@dataclass(frozen=True)
class AbelianGroup:
    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")
        if any(y % x for x, y in zip(self.torsion, self.torsion[1:])):
            raise ValueError("torsion coefficients must form a divisibility chain")

    @property
    def order(self) -> int | None:
        """Order of the group, None when infinite."""
        return None if self.free_rank else math.prod(self.torsion)

    def __str__(self):
        parts = [f"Z_{t}" for t in self.torsion] + ["Z"] * self.free_rank
        return " x ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}


@dataclass(frozen=True)
class LensParams:
    p: int
    q: int
    lam_mu: tuple[int, int] = field(default=(0, 0), compare=False)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def euler_number(p: SeifertPresentation) -> Fraction:
    """Rational Euler number b + sum beta/alpha over fibers with alpha != 0."""
    return p.b + sum((Fraction(b, a) for a, b in p.fibers if a != 0), Fraction(0))


def normalize(p: SeifertPresentation) -> SeifertPresentation:
    """Equivalent presentation with b = -1 and every alpha >= 0.

    The shift goes into the last fiber with nonzero alpha.
    """
    fibers = [(-a, -b) if a < 0 else (a, b) for a, b in p.fibers]
    k = p.b + 1
    if k:
        for i in reversed(range(3)):
            a, b = fibers[i]
            if a != 0:
                fibers[i] = (a, b + k * a)
                break
        else:
            raise DomainError("cannot move b without a fiber of nonzero alpha")
    return SeifertPresentation(-1, tuple(fibers))


def fiber_classes(p: SeifertPresentation) -> tuple[FiberClass, FiberClass, FiberClass]:
    n = normalize(p)
    return tuple(class_of(a, b) for a, b in n.fibers)


def t_of_classes(c1: FiberClass, c2: FiberClass, c3: FiberClass) -> GoldenNum:
    return contract3(PHI_T, class_vector(c1), class_vector(c2), class_vector(c3))


def t_invariant(p: SeifertPresentation) -> GoldenNum:
    """t-invariant by contracting the cubic matrix with the three fiber vectors."""
    return t_of_classes(*fiber_classes(p))


def lens_presentation(p: int, q: int) -> SeifertPresentation:
    """A presentation of L(p, q): the fiber (p, q) next to (0, 1) and (1, 1) at b = -1."""
    return SeifertPresentation(-1, ((p, q), (0, 1), (1, 1)))


def lens_reduce(b: int, f1: Fiber, f2: Fiber) -> LensParams:
    """Lens parameters of the two-fiber presentation (b; f1, f2).

    A nonzero b is first pushed into the second fiber, beta2 -> beta2 + b*alpha2.
    Then p = a1*b2 + b1*a2 and q = a2*lam - b2*mu with a1*lam + b1*mu = 1.
    """
    (a1, b1), (a2, b2) = f1, f2
    for i, (a, bb) in enumerate((f1, f2), 1):
        if math.gcd(a, bb) != 1:
            raise DomainError(f"fiber {i} not coprime: ({a},{bb})")
    b2 = b2 + b * a2
    g, lam, mu = ext_gcd(a1, b1)
    return LensParams(a1 * b2 + b1 * a2, a2 * lam - b2 * mu, (lam, mu))


def smith_normal_form(m) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix, d1 | d2 | ...

    Non-negative; the list has min(rows, cols) entries.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            diag.extend([0] * (min(rows, cols) - t))
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        done = False
            if not done:
                continue
            # pivot must divide the remaining block
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            i, _ = bad
            a[t] = [x + y for x, y in zip(a[t], a[i])]
        diag.append(abs(a[t][t]))
    return diag


def relation_matrix(p: SeifertPresentation) -> list[list[int]]:
    (a1, b1), (a2, b2), (a3, b3) = p.fibers
    return [
        [a1, 0, 0, b1],
        [0, a2, 0, b2],
        [0, 0, a3, b3],
        [1, 1, 1, -p.b],
    ]


def h1(p: SeifertPresentation) -> AbelianGroup:
    diag = smith_normal_form(relation_matrix(p))
    return AbelianGroup(tuple(d for d in diag if d > 1), sum(1 for d in diag if d == 0))


def sweep_all_classes() -> dict[tuple[FiberClass, FiberClass, FiberClass], GoldenNum]:
    """t-value of every unordered triple of fiber classes (364 multisets)."""
    return {
        triple: t_of_classes(*triple)
        for triple in itertools.combinations_with_replacement(ALL_CLASSES, 3)
    }


def random_presentation(rng: random.Random, bound: int = 30, allow_zero: bool = False) -> SeifertPresentation:
    fibers = []
    while len(fibers) < 3:
        a = rng.randint(-bound, bound)
        b = rng.randint(-bound, bound)
        if a == 0 and not allow_zero:
            continue
        if math.gcd(a, b) == 1:
            fibers.append((a, b))
    return SeifertPresentation(rng.randint(-bound, bound), tuple(fibers))


class ParseError(DomainError):
    def __init__(self, message: str, column: int | None = None):
        self.column = column
        super().__init__(message if column is None else f"column {column}: {message}")


_FIBER_RE = re.compile(r"\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)")
_B_RE = re.compile(r"\s*([+-]?\d+)\s*;")

# a two-fiber lens presentation gets this trivial third fiber
TRIVIAL_FIBER = (1, 0)


def parse_presentation(text: str) -> SeifertPresentation:
    """Parse ``"b; (a1,b1) (a2,b2) (a3,b3)"``; two fibers are padded with (1,0).

    Columns in error messages are 1-based.
    """
    m = _B_RE.match(text)
    if not m:
        raise ParseError("expected an integer b followed by ';'", 1)
    b = int(m.group(1))
    pos = m.end()
    fibers = []
    while True:
        rest = text[pos:]
        if not rest.strip():
            break
        fm = _FIBER_RE.match(text, pos)
        if not fm:
            col = pos + (len(rest) - len(rest.lstrip())) + 1
            raise ParseError("expected a fiber '(alpha,beta)'", col)
        fibers.append((int(fm.group(1)), int(fm.group(2))))
        pos = fm.end()
    if len(fibers) == 2:
        fibers.append(TRIVIAL_FIBER)
    if len(fibers) != 3:
        raise ParseError(f"expected 2 or 3 fibers, found {len(fibers)}")
    return SeifertPresentation(b, tuple(fibers))
