"""Exact arithmetic in Z[e, s] where e**2 = e + 1 and s**2 = e.

Elements are stored over the basis {1, e, s, e*s}, so ``GoldenNum(a, b, c, d)``
is ``(a + b*e) + (c + d*e)*s``.  The real embedding sends e to the golden
ratio and s to its positive square root.
"""

from __future__ import annotations

import math

__all__ = ["GoldenNum", "ZERO", "ONE", "EPS", "SQRT_EPS", "eps_pow", "to_real", "PHI"]

PHI = (1 + math.sqrt(5)) / 2
SQRT_PHI = math.sqrt(PHI)

_INT64_MAX = 2**63 - 1
_INT64_MIN = -(2**63)


def _checked(x: int) -> int:
    if not _INT64_MIN <= x <= _INT64_MAX:
        raise OverflowError(f"GoldenNum coefficient {x} exceeds 64-bit range")
    return x


class GoldenNum(tuple):
    """Immutable element (a, b, c, d) of the ring; compares equal only to GoldenNums and ints."""

    __slots__ = ()

    def __new__(cls, a: int = 0, b: int = 0, c: int = 0, d: int = 0):
        for name, v in zip("abcd", (a, b, c, d)):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"GoldenNum field {name} must be int, got {type(v).__name__}")
            _checked(v)
        return tuple.__new__(cls, (a, b, c, d))

    a = property(lambda self: tuple.__getitem__(self, 0))
    b = property(lambda self: tuple.__getitem__(self, 1))
    c = property(lambda self: tuple.__getitem__(self, 2))
    d = property(lambda self: tuple.__getitem__(self, 3))

    @classmethod
    def coerce(cls, x: GoldenNum | int) -> GoldenNum:
        if isinstance(x, GoldenNum):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return cls(x)
        raise TypeError(f"cannot convert {x!r} to GoldenNum")

    def __eq__(self, other):
        if isinstance(other, GoldenNum):
            return tuple.__eq__(self, other)
        if isinstance(other, int) and not isinstance(other, bool):
            return tuple.__eq__(self, (other, 0, 0, 0))
        if isinstance(other, tuple):
            # a bare tuple would otherwise compare equal through tuple.__eq__
            return False
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(("GoldenNum", *self))

    # no ordering: the ring is not ordered compatibly with these tuples
    __lt__ = __le__ = __gt__ = __ge__ = lambda self, other: NotImplemented

    def __add__(self, other):
        if type(other) is not GoldenNum:
            try:
                other = GoldenNum.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, c1, d1 = self
        a2, b2, c2, d2 = other
        return _make(a1 + a2, b1 + b2, c1 + c2, d1 + d2)

    __radd__ = __add__

    def __neg__(self):
        a, b, c, d = self
        return _make(-a, -b, -c, -d)

    def __sub__(self, other):
        try:
            o = GoldenNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is not GoldenNum:
            try:
                other = GoldenNum.coerce(other)
            except TypeError:
                return NotImplemented
        # x = p1 + q1 s, y = p2 + q2 s with p, q in Z[e]; s^2 = e, e^2 = e + 1
        a1, b1, c1, d1 = self
        a2, b2, c2, d2 = other
        bb = b1 * b2
        dd = d1 * d2
        q0 = c1 * c2 + dd  # q1*q2 = q0 + q1_ e
        q1_ = c1 * d2 + c2 * d1 + dd
        return _make(
            a1 * a2 + bb + q1_,
            a1 * b2 + a2 * b1 + bb + q0 + q1_,
            a1 * c2 + b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 + b1 * d2 + c1 * b2 + d1 * a2 + d1 * b2,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers; use eps_pow for units")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        a, b, c, d = self
        return bool(a or b or c or d)

    def __float__(self):
        return to_real(self)

    def is_rational_part(self) -> bool:
        """True when the element lies in Z[e], i.e. has no s-component."""
        return self.c == 0 and self.d == 0

    def to_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d, "float": to_real(self)}

    @classmethod
    def from_json(cls, obj: dict) -> GoldenNum:
        return cls(int(obj["a"]), int(obj["b"]), int(obj["c"]), int(obj["d"]))

    def __str__(self):
        return _format(self)

    def __repr__(self):
        return f"GoldenNum({self.a}, {self.b}, {self.c}, {self.d})"


def _make(a, b, c, d) -> GoldenNum:
    # unchecked-type constructor for ring results; range is still enforced
    if (
        a > _INT64_MAX or a < _INT64_MIN or b > _INT64_MAX or b < _INT64_MIN
        or c > _INT64_MAX or c < _INT64_MIN or d > _INT64_MAX or d < _INT64_MIN
    ):
        raise OverflowError(f"GoldenNum result ({a}, {b}, {c}, {d}) exceeds 64-bit range")
    return _tuple_new(GoldenNum, (a, b, c, d))


_tuple_new = tuple.__new__


def _format_zeps(x: int, y: int) -> str:
    terms = []
    if x:
        terms.append(str(x))
    if y:
        coef = "" if y == 1 else "-" if y == -1 else f"{y}*"
        terms.append(f"{coef}e")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def _format(x: GoldenNum) -> str:
    """Human-readable form, e.g. ``3 + e`` or ``(-3 + 2*e)*s``."""
    rat = _format_zeps(x.a, x.b) if (x.a or x.b) else ""
    if not (x.c or x.d):
        return rat or "0"
    inner = _format_zeps(x.c, x.d)
    if x.c and x.d:
        irr = f"({inner})*s"
    elif inner == "1":
        irr = "s"
    elif inner == "-1":
        irr = "-s"
    else:
        irr = f"{inner}*s"
    if not rat:
        return irr
    if irr.startswith("-"):
        return f"{rat} - {irr[1:]}"
    return f"{rat} + {irr}"


ZERO = GoldenNum()
ONE = GoldenNum(1)
EPS = GoldenNum(0, 1)
SQRT_EPS = GoldenNum(0, 0, 1)
EPS_INV = GoldenNum(-1, 1)  # e - 1


def eps_pow(half_steps: int) -> GoldenNum:
    """Return ``e ** (half_steps / 2)`` exactly.

    >>> eps_pow(-2)
    GoldenNum(-1, 1, 0, 0)
    >>> eps_pow(-7)
    GoldenNum(0, 0, 5, -3)
    """
    whole, half = divmod(half_steps, 2)
    base = EPS if whole >= 0 else EPS_INV
    result = base ** abs(whole)
    return result * SQRT_EPS if half else result


def to_real(x: GoldenNum) -> float:
    return x.a + x.b * PHI + (x.c + x.d * PHI) * SQRT_PHI
