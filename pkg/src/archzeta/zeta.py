"""Closed-form zeta values at s = +-(k-n)/2, normalization constants, and
the constant-factor audit.

Three routes compute the value at the right point: the Gamma-product form
(form1), the chain through the matrix coefficient / dimension / formal
degree (chain, proved equal to form1), and the Euler-normalized display
(form2).  form2 and the left-point display are audited against the
oracle-anchored form1 rather than asserted equal: each ratio must be a
pure 2-power times i-power, recorded per context.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AuditStructuralFailure, NonPositiveArgument
from .exact import ExactScalar, HalfInt, ONE, gamma_exact, i_pow, \
    minus_one_pow, product
from .lfactors import euler_left, euler_right, gamma_factor_from_euler
from .ratfun import c_ratio
from .repdims import dim_lambda_closed, formal_degree, weyl_dim
from .weights import ZetaContext

RIGHT_ROUTES = ("form1", "chain", "form2")
LEFT_ROUTES = ("display", "funceq")


@dataclass(frozen=True)
class ZetaValue:
    value: ExactScalar
    route: str


def dim_gl_pair(ctx: ZetaContext) -> int:
    """dim(GL(a), tau) * dim(GL(b), nu)."""
    return weyl_dim(ctx.tau) * weyl_dim(ctx.nu)


def _power_exponent(ctx: ZetaContext) -> int:
    """-sum(tau) - sum(nu*) + a(k+r)/2 + b(k-r)/2, the recurring exponent."""
    return (-sum(ctx.tau) - sum(ctx.nu_star)
            + ctx.a * ctx.tw.k_plus_r_half + ctx.b * ctx.tw.k_minus_r_half)


def mc_closed(ctx: ZetaContext) -> ExactScalar:
    """Closed-form Gaussian matrix coefficient of the minor polynomial I
    (independently confirmed by the Monte-Carlo oracle)."""
    a, b = ctx.a, ctx.b
    kpr, kmr = ctx.tw.k_plus_r_half, ctx.tw.k_minus_r_half
    out = ExactScalar.make(1, 0, _power_exponent(ctx))
    for j in range(1, a + 1):
        out = out * gamma_exact(ctx.tau[j - 1] - kpr + a - j + 1)
        out = out / gamma_exact(j)
    for j in range(1, b + 1):
        out = out * gamma_exact(ctx.nu_star[j - 1] - kmr + b - j + 1)
        out = out / gamma_exact(j)
    return out


def zeta_right_form1(ctx: ZetaContext) -> ZetaValue:
    """Gamma-product form of the value at s = (k-n)/2."""
    a, b, n, k = ctx.a, ctx.b, ctx.n, ctx.k
    kpr, kmr = ctx.tw.k_plus_r_half, ctx.tw.k_minus_r_half
    out = ExactScalar.make(Fraction(1, dim_gl_pair(ctx)),
                           Fraction(2 * a * b - n, 2), a * b)
    out = out * ExactScalar.make(1, 1, 1, 1) ** _power_exponent(ctx)
    for j in range(1, a + 1):
        out = out * gamma_exact(ctx.tau[j - 1] - j + kmr - b + 1)
    for j in range(1, b + 1):
        out = out * gamma_exact(ctx.nu_star[j - 1] - j + kpr - a + 1)
    for j in range(1, n + 1):
        out = out / gamma_exact(k - j + 1)
    return ZetaValue(out, "form1")


def zeta_right_chain(ctx: ZetaContext) -> ZetaValue:
    """Composition (2i)^pow * (dim tau * dim nu)^{-1} * dim(lambda) *
    formal_degree^{-1} * MC(I)."""
    pow_2i = _power_exponent(ctx)
    out = ExactScalar.make(Fraction(1), Fraction(pow_2i), 0, pow_2i)
    out = out * ExactScalar.make(Fraction(dim_lambda_closed(ctx),
                                          dim_gl_pair(ctx)))
    out = out / formal_degree(ctx)
    out = out * mc_closed(ctx)
    return ZetaValue(out, "chain")


def norm_factor(side: str, n: int, k: int) -> ExactScalar:
    """Archimedean normalization factor for Siegel Eisenstein series.

    right (s=(k-n)/2): 2^{n(n-1)} pi^{n(n-1)/2} (-2 pi i)^{-nk} prod Gamma(k+1-j)
    left  (s=(n-k)/2): 2^{n(n-1)} pi^{-n(n+1)/2} i^{nk} prod Gamma(j)
    """
    if k < n or n < 1:
        raise NonPositiveArgument(f"need k >= n >= 1, got n={n}, k={k}")
    if side == "right":
        out = ExactScalar.make(1, n * (n - 1), Fraction(n * (n - 1), 2))
        out = out * ExactScalar.make(-1, 1, 1, 1) ** (-n * k)
        return out * product(gamma_exact(k + 1 - j) for j in range(1, n + 1))
    if side == "left":
        out = ExactScalar.make(1, n * (n - 1), -Fraction(n * (n + 1), 2),
                               n * k)
        return out * product(gamma_exact(j) for j in range(1, n + 1))
    raise ValueError(f"unknown side {side!r}")


def w_coefficient(side: str, n: int, k: int) -> ExactScalar:
    """The Fourier-coefficient values W at the two points: the inverses of
    the corresponding normalization factors."""
    return norm_factor(side, n, k).inverse()


def zeta_right_form2(ctx: ZetaContext) -> ZetaValue:
    """Euler-normalized display at the right point.  Not asserted equal to
    form1; the audit records the ratio."""
    a, b, n, k, r = ctx.a, ctx.b, ctx.n, ctx.k, ctx.r
    out = ExactScalar.make(Fraction(1, dim_gl_pair(ctx)),
                           Fraction(n * n - 2 * n, 2))
    out = out * i_pow((-n * n + n) // 2 - a * b) * minus_one_pow(n * r)
    out = out * euler_right(ctx) / norm_factor("right", n, k)
    return ZetaValue(out, "form2")


def zeta_left_display(ctx: ZetaContext) -> ZetaValue:
    """Displayed value at s = (n-k)/2 (audited, not asserted)."""
    a, b, n, k, r = ctx.a, ctx.b, ctx.n, ctx.k, ctx.r
    kpr, kmr = ctx.tw.k_plus_r_half, ctx.tw.k_minus_r_half
    out = ExactScalar.make(Fraction(1, dim_gl_pair(ctx)),
                           Fraction(n * n - 2 * n, 2))
    out = out * i_pow((n * n + n) // 2 + a * b)
    out = out * minus_one_pow(n * r + a * kpr + b * kmr + (n + 1) * (n // 2))
    out = out * euler_left(ctx) / norm_factor("left", n, k)
    return ZetaValue(out, "display")


def zeta_left_funceq(ctx: ZetaContext) -> ZetaValue:
    """Left-point value assembled through the functional-equation chain:
    W_left * sign * c_ratio * gamma * Z_right(form1) / W_right."""
    n, k, r = ctx.n, ctx.k, ctx.r
    sign = minus_one_pow(sum(ctx.tau) + sum(ctx.nu_star) + (n // 2) * r)
    out = (w_coefficient("left", n, k) * sign * c_ratio(n, k)
           * gamma_factor_from_euler(ctx) * zeta_right_form1(ctx).value
           / w_coefficient("right", n, k))
    return ZetaValue(out, "funceq")


@dataclass
class AuditReport:
    """Per-context record of the display-vs-normative ratios.

    Every ratio must be a monomial with coeff 1 and no pi content; its
    2-power (in halves) and i-power are what the audit reports.
    """
    ctx_key: tuple
    ratios: dict  # route-pair -> ExactScalar
    flags: dict   # route-pair -> {pow2_halves, ipow, coeff_is_one, powpi_is_zero}

    def to_json(self) -> dict:
        return {
            "ctx": {"a": self.ctx_key[0], "b": self.ctx_key[1],
                    "k": self.ctx_key[2], "r": self.ctx_key[3],
                    "tau": list(self.ctx_key[4]), "nu": list(self.ctx_key[5])},
            "ratios": {k: v.to_json() for k, v in self.ratios.items()},
            "flags": self.flags,
        }


def _ratio_flags(pair: str, ratio: ExactScalar) -> dict:
    flags = {
        "pow2_halves": ratio.pow2.halves,
        "ipow": ratio.ipow,
        "coeff_is_one": ratio.coeff == 1 and not ratio.zero,
        "powpi_is_zero": ratio.pow_pi == HalfInt(0),
    }
    if not (flags["coeff_is_one"] and flags["powpi_is_zero"]):
        raise AuditStructuralFailure(
            f"ratio {pair} = {ratio} carries pi or non-unit rational content")
    return flags


def audit_context(ctx: ZetaContext) -> AuditReport:
    """Ratios form2/form1, funceq/display, and (at k=n) display/form1 and
    funceq/form1, each checked to be a pure 2-power times i-power."""
    form1 = zeta_right_form1(ctx).value
    chain = zeta_right_chain(ctx).value
    if form1 != chain:
        raise AuditStructuralFailure(
            f"form1 != chain at {ctx.key()}: {form1} vs {chain}")
    pairs = {
        "form2/form1": zeta_right_form2(ctx).value / form1,
        "leftFuncEq/leftDisplay":
            zeta_left_funceq(ctx).value / zeta_left_display(ctx).value,
    }
    if ctx.k == ctx.n:
        pairs["leftDisplay/form1"] = zeta_left_display(ctx).value / form1
        pairs["leftFuncEq/form1"] = zeta_left_funceq(ctx).value / form1
    flags = {pair: _ratio_flags(pair, ratio) for pair, ratio in pairs.items()}
    return AuditReport(ctx.key(), pairs, flags)


def audit(contexts) -> list[AuditReport]:
    """Audit a sweep in deterministic (sorted ctx key) order."""
    ordered = sorted(contexts, key=lambda c: c.key())
    return [audit_context(ctx) for ctx in ordered]


def audit_dependence_summary(reports: list[AuditReport]) -> dict:
    """For each ratio name, whether the (pow2, ipow) pair is a function of
    (a, b, k, r) alone across the audited sweep.  Reported, not asserted."""
    seen: dict[str, dict[tuple, set]] = {}
    for rep in reports:
        abkr = rep.ctx_key[:4]
        for pair, flag in rep.flags.items():
            seen.setdefault(pair, {}).setdefault(abkr, set()).add(
                (flag["pow2_halves"], flag["ipow"]))
    return {pair: all(len(vals) == 1 for vals in by_abkr.values())
            for pair, by_abkr in seen.items()}
