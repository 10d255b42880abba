import json
import math

import pytest
from hypothesis import given, strategies as st

from tinvariant.golden import EPS, ONE, SQRT_EPS, ZERO, GoldenNum, eps_pow, to_real

PHI = (1 + math.sqrt(5)) / 2

small = st.integers(min_value=-100, max_value=100)
golden = st.builds(GoldenNum, small, small, small, small)
rational = st.builds(GoldenNum, small, small)
half_steps = st.integers(min_value=-16, max_value=16)


def test_additive_identity():
    x = GoldenNum(3, -2, 7, 1)
    assert ZERO + x == x
    assert x + 0 == x


def test_componentwise_add():
    assert GoldenNum(1, 1) + GoldenNum(2, 1) == GoldenNum(3, 2)
    # e + 2 and 2 - e
    assert (EPS + 2) + (2 - EPS) == GoldenNum(4)


def test_mul_examples():
    assert EPS * EPS == GoldenNum(1, 1)
    assert SQRT_EPS * SQRT_EPS == GoldenNum(0, 1)
    assert (EPS + 1) * (EPS + 1) == GoldenNum(2, 3)


def test_eps_pow_examples():
    assert eps_pow(0) == ONE
    assert eps_pow(-2) == GoldenNum(-1, 1)
    assert eps_pow(-4) == GoldenNum(2, -1)
    # e^(-7/2) = e^-4 * s = (5 - 3e) s
    assert eps_pow(-7) == GoldenNum(0, 0, 5, -3)


def test_quadruple_from_cubed_inverse_is_minus_five_halves():
    # (e - 1)^3 * s reduces to (2e - 3) s, which is e^(-5/2), not e^(-7/2)
    assert (eps_pow(-2) ** 3) * SQRT_EPS == GoldenNum(0, 0, -3, 2)
    assert eps_pow(-5) == GoldenNum(0, 0, -3, 2)
    assert to_real(GoldenNum(0, 0, -3, 2)) == pytest.approx(PHI**-2.5)


@pytest.mark.parametrize("k", range(-9, 10))
def test_eps_pow_against_float(k):
    assert to_real(eps_pow(k)) == pytest.approx(PHI ** (k / 2), rel=1e-12)


def test_to_real_examples():
    assert to_real(ONE) == 1.0
    assert to_real(EPS) == pytest.approx(1.6180339887, abs=1e-10)
    assert to_real(SQRT_EPS) == pytest.approx(1.2720196495, abs=1e-10)


@given(golden, golden, golden)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO
    assert x * ONE == x


@given(half_steps, half_steps)
def test_eps_pow_additive(j, k):
    assert eps_pow(j) * eps_pow(k) == eps_pow(j + k)


@given(golden, golden)
def test_to_real_is_homomorphism(x, y):
    assert to_real(x + y) == pytest.approx(to_real(x) + to_real(y), abs=1e-9)
    assert to_real(x * y) == pytest.approx(to_real(x) * to_real(y), rel=1e-9, abs=1e-9)


@given(rational, rational)
def test_zeps_closed_under_mul(x, y):
    assert (x * y).is_rational_part()


def test_unique_representation_and_hash():
    assert GoldenNum(1, 2, 3, 4) == GoldenNum(1, 2, 3, 4)
    assert GoldenNum(1, 2, 3, 4) != GoldenNum(1, 2, 3, 5)
    assert len({GoldenNum(1), ONE, GoldenNum(1, 0, 0, 0)}) == 1
    assert GoldenNum(2) == 2
    assert GoldenNum(1, 2, 3, 4) != (1, 2, 3, 4)


def test_overflow_detected():
    big = GoldenNum(2**62)
    with pytest.raises(OverflowError):
        big + big
    with pytest.raises(OverflowError):
        GoldenNum(2**63)
    with pytest.raises(OverflowError):
        big * big


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        GoldenNum(1.5)
    with pytest.raises(TypeError):
        GoldenNum(True)


def test_json_roundtrip():
    x = GoldenNum(3, -1, 2, 5)
    obj = json.loads(json.dumps(x.to_json()))
    assert set(obj) == {"a", "b", "c", "d", "float"}
    assert obj["float"] == pytest.approx(to_real(x))
    assert GoldenNum.from_json(obj) == x


@pytest.mark.parametrize(
    "x, text",
    [
        (ZERO, "0"),
        (GoldenNum(3, 1), "3 + e"),
        (GoldenNum(2, -1), "2 - e"),
        (GoldenNum(0, 2), "2*e"),
        (SQRT_EPS, "s"),
        (GoldenNum(0, 0, 5, -3), "(5 - 3*e)*s"),
        (GoldenNum(1, 0, -1), "1 - s"),
    ],
)
def test_display(x, text):
    assert str(x) == text
