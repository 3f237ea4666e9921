import json
import math
import random
from fractions import Fraction

import pytest

from archzeta.errors import NonPositiveArgument, Overflow
from archzeta.exact import (ONE, ZERO, ExactScalar, HalfInt, gamma_C,
                            gamma_exact, i_pow, minus_one_pow, product)


def test_halfint_basics():
    h = HalfInt.of(Fraction(3, 2))
    assert h.halves == 3 and not h.is_integer
    assert str(h) == "3/2"
    assert str(HalfInt(4)) == "2"
    assert HalfInt(4).as_int() == 2
    assert HalfInt(1) + HalfInt(1) == HalfInt(2)
    assert -HalfInt(3) == HalfInt(-3)
    assert abs(HalfInt(-5)) == HalfInt(5)
    assert HalfInt(1) < HalfInt(2) <= HalfInt(2)


def test_make_normalizes_two_adic_and_sign():
    assert ExactScalar.make(6) == ExactScalar.make(3, 1)
    assert ExactScalar.make(Fraction(5, 8)) == ExactScalar.make(5, -3)
    assert ExactScalar.make(-5).ipow == 2
    assert ExactScalar.make(-1) * ExactScalar.make(-1) == ONE
    # idempotent under re-make
    x = ExactScalar.make(Fraction(-12, 7), Fraction(1, 2), -2, 3)
    y = ExactScalar.make(x.coeff, x.pow2.as_fraction(),
                         x.pow_pi.as_fraction(), x.ipow)
    assert x == y


def test_arithmetic_roundtrips():
    rng = random.Random(11)
    for _ in range(200):
        x = ExactScalar.make(Fraction(rng.randint(1, 40), rng.randint(1, 40)),
                             Fraction(rng.randint(-6, 6), 2),
                             Fraction(rng.randint(-6, 6), 2),
                             rng.randrange(4))
        y = ExactScalar.make(Fraction(rng.randint(1, 40), rng.randint(1, 40)),
                             rng.randint(-3, 3), rng.randint(-3, 3),
                             rng.randrange(4))
        assert (x * y) / y == x
        assert x * x.inverse() == ONE
        fx, fy = x.to_float(), y.to_float()
        assert abs((x * y).to_float() - fx * fy) <= 1e-10 * abs(fx * fy)
        assert (x ** 3).to_float() == pytest.approx(fx ** 3, rel=1e-10)


def test_zero_handling():
    assert ZERO.to_float() == 0
    assert str(ZERO) == "0"
    assert ZERO * ONE == ZERO
    with pytest.raises(Exception):
        ZERO.inverse()


def test_str_forms():
    assert str(ExactScalar.make(1, 0, 1)) == "1 * pi^(2/2)"
    assert str(ExactScalar.make(-1)) == "-1"
    assert str(ExactScalar.make(1, Fraction(1, 2))) == "1 * 2^(1/2)"
    assert str(i_pow(1)) == "1 * i"
    assert str(i_pow(3)) == "-1 * i"


def test_gamma_exact_values():
    assert gamma_exact(5) == ExactScalar.make(24)
    assert gamma_exact(1) == ONE
    assert gamma_exact(Fraction(1, 2)) == ExactScalar.make(1, 0,
                                                           Fraction(1, 2))
    assert gamma_exact(Fraction(3, 2)) == ExactScalar.make(
        Fraction(1, 2), 0, Fraction(1, 2))
    with pytest.raises(NonPositiveArgument):
        gamma_exact(0)
    with pytest.raises(NonPositiveArgument):
        gamma_exact(Fraction(-1, 2))


def test_gamma_recurrence():
    for halves in range(1, 101):
        s = HalfInt(halves)
        lhs = gamma_exact(s + HalfInt(2))
        rhs = ExactScalar.make(s.as_fraction()) * gamma_exact(s)
        assert lhs == rhs, halves


def test_gamma_C_values():
    assert gamma_C(Fraction(1, 2)) == ExactScalar.make(1, Fraction(1, 2))
    assert gamma_C(2) == ExactScalar.make(1, -1, -2)
    for halves in range(1, 101):
        s = halves / 2.0
        ref = 2.0 * (2 * math.pi) ** (-s) * math.gamma(s)
        assert gamma_C(HalfInt(halves)).to_float().real == \
            pytest.approx(ref, rel=1e-10)


def test_signs_and_phases():
    assert minus_one_pow(7) == ExactScalar.make(-1)
    assert minus_one_pow(0) == ONE
    assert i_pow(2) == ExactScalar.make(-1)
    assert i_pow(-1) == i_pow(3)
    assert product([i_pow(1)] * 4) == ONE


def test_json_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        x = ExactScalar.make(Fraction(rng.randint(1, 99), rng.randint(1, 99)),
                             Fraction(rng.randint(-8, 8), 2),
                             Fraction(rng.randint(-8, 8), 2),
                             rng.randrange(4))
        blob = json.dumps(x.to_json())
        assert ExactScalar.from_json(json.loads(blob)) == x
    assert ExactScalar.from_json(ZERO.to_json()) == ZERO


def test_overflow_is_reported():
    big = ExactScalar.make(1, 10 ** 6)
    with pytest.raises(Overflow):
        big.to_float()
