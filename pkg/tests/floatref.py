"""Double-precision reference evaluators, independent of the exact
monomial path: math.gamma / cmath throughout."""

import cmath
import math

from archzeta.weights import shifted_parameters


def gamma_C_f(s: float) -> float:
    return 2.0 * (2.0 * math.pi) ** (-s) * math.gamma(s)


def euler_f(s: float, ctx) -> complex:
    out = 1.0 + 0j
    for c in shifted_parameters(ctx.wt, ctx.sig, ctx.r):
        arg = s + abs(c.as_fraction())
        out *= cmath.exp(-1j * math.pi / 2 * arg) * gamma_C_f(arg)
    return out


def mc_f(ctx) -> float:
    a, b = ctx.a, ctx.b
    kpr, kmr = ctx.tw.k_plus_r_half, ctx.tw.k_minus_r_half
    p = -sum(ctx.tau) - sum(ctx.nu_star) + a * kpr + b * kmr
    out = math.pi ** p
    for j in range(1, a + 1):
        out *= math.gamma(ctx.tau[j - 1] - kpr + a - j + 1) / math.gamma(j)
    for j in range(1, b + 1):
        out *= math.gamma(ctx.nu_star[j - 1] - kmr + b - j + 1) / math.gamma(j)
    return out


def form1_f(ctx) -> complex:
    a, b, n, k = ctx.a, ctx.b, ctx.n, ctx.k
    kpr, kmr = ctx.tw.k_plus_r_half, ctx.tw.k_minus_r_half
    from archzeta.zeta import dim_gl_pair
    p = -sum(ctx.tau) - sum(ctx.nu_star) + a * kpr + b * kmr
    out = (2.0 ** (a * b - n / 2.0) * math.pi ** (a * b)
           * (2j * math.pi) ** p / dim_gl_pair(ctx))
    for j in range(1, a + 1):
        out *= math.gamma(ctx.tau[j - 1] - j + kmr - b + 1)
    for j in range(1, b + 1):
        out *= math.gamma(ctx.nu_star[j - 1] - j + kpr - a + 1)
    for j in range(1, n + 1):
        out /= math.gamma(k - j + 1)
    return out


def fd_f(ctx) -> float:
    a, b, n = ctx.a, ctx.b, ctx.n
    hc = [h.as_fraction() for h in _hc(ctx)]
    roots = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            roots *= abs(float(hc[i] - hc[j]))
    denom = 1.0
    for j in range(1, a + 1):
        denom *= math.gamma(j)
    for j in range(1, b + 1):
        denom *= math.gamma(j)
    return (2.0 ** ((a + b - 2 * a * b) / 2.0) * math.pi ** (-a * b)
            * roots / denom)


def _hc(ctx):
    from archzeta.weights import hc_parameter
    return hc_parameter(ctx.wt, ctx.sig)
