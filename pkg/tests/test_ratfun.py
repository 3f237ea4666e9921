import random
from fractions import Fraction

import pytest

from archzeta.errors import IrreducibleGammaContent, NotConstant
from archzeta.exact import ExactScalar, HalfInt, minus_one_pow
from archzeta.ratfun import (GammaFactorList, Poly, RationalFunction, c_ratio,
                             gamma_shift_reduce, multivariate_gamma, poly_gcd)


def test_poly_arithmetic():
    s = Poly.linear(0, 1)
    p = (s + Poly.constant(1)) * (s + Poly.constant(2))
    assert p.evaluate(Fraction(3)) == 20
    assert p.degree == 2
    q, r = p.divmod(s + Poly.constant(1))
    assert r.is_zero and q == s + Poly.constant(2)
    assert (p - p).is_zero
    assert (s ** 3).evaluate(Fraction(2)) == 8


def test_poly_gcd():
    s = Poly.linear(0, 1)
    a = (s + Poly.constant(1)) ** 2 * (s - Poly.constant(3))
    b = (s + Poly.constant(1)) * (s + Poly.constant(5))
    g = poly_gcd(a, b)
    assert g == (s + Poly.constant(1)).monic()


def test_rational_function_reduces():
    s = Poly.linear(0, 1)
    num = (s + Poly.constant(1)) * (s + Poly.constant(2))
    den = (s + Poly.constant(2)) * Poly.constant(3)
    f = RationalFunction(num, den)
    g = RationalFunction(s + Poly.constant(1), Poly.constant(3))
    assert f == g
    assert not f.is_constant()
    with pytest.raises(NotConstant):
        f.constant_value()
    c = RationalFunction(Poly.constant(6), Poly.constant(4))
    assert c.constant_value() == Fraction(3, 2)


def test_multivariate_gamma_structure():
    fl = multivariate_gamma(3, Fraction(5, 2), 1)
    assert fl.pi_pow == HalfInt(6)  # pi^{m(m-1)/2} = pi^3
    bases = sorted(b.as_fraction() for b, sg, e in fl.factors)
    assert bases == [Fraction(1, 2), Fraction(3, 2), Fraction(5, 2)]
    assert all(sg == 1 and e == 1 for _, sg, e in fl.factors)


def test_gamma_shift_reduce_pochhammer():
    # Gamma(s+3)/Gamma(s+1) = (s+1)(s+2)
    fl = GammaFactorList(((HalfInt(6), 1, 1), (HalfInt(2), 1, -1)), HalfInt(0))
    rf, residual_pi = gamma_shift_reduce(fl)
    assert residual_pi == HalfInt(0)
    s = Poly.linear(0, 1)
    expect = RationalFunction((s + Poly.constant(1)) * (s + Poly.constant(2)),
                              Poly.constant(1))
    assert rf == expect


def test_gamma_shift_reduce_random_cancellation():
    rng = random.Random(3)
    for _ in range(40):
        base = HalfInt(rng.randint(-4, 4))
        shift = rng.randint(1, 4)
        sg = rng.choice((1, -1))
        fl = GammaFactorList(((base + HalfInt(2 * shift), sg, 1),
                              (base, sg, -1)), HalfInt(0))
        rf, _ = gamma_shift_reduce(fl)
        x = Fraction(rng.randint(20, 40))  # far from any pole
        expect = Fraction(1)
        for t in range(shift):
            expect *= base.as_fraction() + t + sg * x
        assert rf.num.evaluate(x) == expect * rf.den.evaluate(x)


def test_gamma_shift_reduce_rejects_unbalanced():
    fl = GammaFactorList(((HalfInt(2), 1, 1),), HalfInt(0))
    with pytest.raises(IrreducibleGammaContent):
        gamma_shift_reduce(fl)
    # mismatched parity classes do not cancel either
    fl = GammaFactorList(((HalfInt(2), 1, 1), (HalfInt(1), 1, -1)), HalfInt(0))
    with pytest.raises(IrreducibleGammaContent):
        gamma_shift_reduce(fl)


def test_c_ratio_values():
    assert c_ratio(2, 2) == ExactScalar.make(-1)
    assert c_ratio(1, 1) == ExactScalar.make(1)
    for n in range(1, 5):
        for k in range(n, n + 4):
            assert c_ratio(n, k) == minus_one_pow((k + n + 1) * (n // 2)), \
                (n, k)
