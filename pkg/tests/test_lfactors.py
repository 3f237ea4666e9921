from fractions import Fraction

import pytest

from archzeta.errors import NotInRing
from archzeta.exact import ExactScalar, HalfInt
from archzeta.lfactors import (euler_factor, euler_left, euler_right,
                               euler_right_expanded, gamma_factor_from_euler,
                               l_factor)
from archzeta.sweep import sweep_contexts
from archzeta.weights import DiscreteSeriesWeight, Signature, make_context

from floatref import euler_f

ANCHOR = make_context(1, 1, (1,), (-1,), 2, 0)


def test_l_factor_anchor():
    wt = DiscreteSeriesWeight((1,), (-1,))
    sig = Signature(1, 1)
    # shifts +-1/2: L(3/2) = Gamma_C(2)^2 = (1/(2 pi^2))^2
    assert l_factor(Fraction(3, 2), wt, sig, 0) == \
        ExactScalar.make(1, -2, -4)
    # L(1/2) = Gamma_C(1)^2 = pi^{-2}
    assert l_factor(Fraction(1, 2), wt, sig, 0) == ExactScalar.make(1, 0, -2)


def test_euler_factor_anchor():
    # E(1/2) = (i^{-1} Gamma_C(1))^2 = -pi^{-2}
    assert euler_right(ANCHOR) == ExactScalar.make(-1, 0, -2)
    assert euler_left(ANCHOR) == euler_right(ANCHOR)  # k = n


def test_euler_factor_requires_integral_arguments():
    with pytest.raises(NotInRing):
        euler_factor(Fraction(1), ANCHOR)  # s + |c| = 3/2 not integral


def test_expansion_matches_term_by_term():
    assert euler_right_expanded(ANCHOR) == euler_right(ANCHOR)
    for ctx in sweep_contexts(max_n=3, k_extra=2, bottom_max=2, gap_max=1,
                              limit=500):
        assert euler_right_expanded(ctx) == euler_right(ctx), ctx.key()


def test_gamma_factor_anchor():
    assert gamma_factor_from_euler(ANCHOR) == ExactScalar.make(-1)


def test_gamma_factor_is_sign_times_power():
    # gamma is always a pure monomial of modulus and phase; sanity-check
    # it solves the defining relation
    from archzeta.exact import i_pow, minus_one_pow
    for ctx in sweep_contexts(max_n=3, k_extra=3, bottom_max=1, gap_max=1,
                              limit=300):
        a, b = ctx.a, ctx.b
        sign = minus_one_pow(sum(ctx.tau) + sum(ctx.nu)
                             + a * ctx.tw.k_plus_r_half
                             + b * ctx.tw.k_minus_r_half)
        phase = i_pow(-(a * a + b * b))
        lhs = euler_left(ctx)
        rhs = sign * phase * gamma_factor_from_euler(ctx) * euler_right(ctx)
        assert lhs == rhs, ctx.key()


def test_euler_float_modulus():
    for ctx in sweep_contexts(max_n=3, k_extra=2, bottom_max=1, gap_max=1,
                              limit=200):
        s = Fraction(ctx.k - ctx.n + 1, 2)
        exact = euler_factor(s, ctx).to_float()
        ref = euler_f(float(s), ctx)
        assert abs(exact - ref) <= 1e-10 * abs(ref), ctx.key()
