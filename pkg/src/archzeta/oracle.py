"""Monte-Carlo Gaussian-moment oracle for the matrix-coefficient values.

Entries are sampled as complex Gaussians with density e^{-pi |z|^2}
relative to the normalized measure (real and imaginary parts independent
N(0, 1/(2 pi))), so plain sample averages estimate the matrix coefficient
with no post-factors.  Batches use counter-based Philox streams keyed by
(seed, batch index): results are bit-identical for a fixed configuration
regardless of thread count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDenominator, ValidationError
from .repdims import weyl_dim
from .weights import ZetaContext

VARIANCE_EXPONENT_BOUND = 4
VARIANCE_K_BOUND = 5


@dataclass(frozen=True)
class OracleConfig:
    samples: int = 2_000_000
    batch_size: int = 100_000
    seed: int = 1
    threads: int = 1

    def __post_init__(self):
        if self.samples <= 0 or self.batch_size <= 0:
            raise ValidationError("samples and batch size must be positive")
        if self.samples % self.batch_size != 0:
            raise ValidationError("samples must be a multiple of batch size")

    @property
    def n_batches(self) -> int:
        return self.samples // self.batch_size


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int


@dataclass(frozen=True)
class MinorPolynomial:
    """The harmonic integrands: kind 'I' (Gram-minor product) or 'QQ'
    (Q tensor Q-tilde with the conjugate-swap substitution)."""
    kind: str
    ctx: ZetaContext

    def __post_init__(self):
        if self.kind not in ("I", "QQ"):
            raise ValidationError(f"unknown polynomial kind {self.kind!r}")

    def exponents(self) -> tuple[tuple, tuple]:
        """(tau-block exponents for j=1..a, nu*-block exponents for j=1..b):
        successive gaps with the twist-shifted bottom entry last."""
        ctx = self.ctx
        tau, nu_star = ctx.tau, ctx.nu_star
        e_tau = [tau[j] - tau[j + 1] for j in range(ctx.a - 1)]
        if ctx.a:
            e_tau.append(tau[-1] - ctx.tw.k_plus_r_half)
        e_nu = [nu_star[j] - nu_star[j + 1] for j in range(ctx.b - 1)]
        if ctx.b:
            e_nu.append(nu_star[-1] - ctx.tw.k_minus_r_half)
        assert all(e >= 0 for e in e_tau + e_nu)
        return tuple(e_tau), tuple(e_nu)

    def total_exponent(self) -> int:
        e_tau, e_nu = self.exponents()
        return sum(e_tau) + sum(e_nu)

    def is_constant(self) -> bool:
        return self.total_exponent() == 0


def _leading_minors(mat: np.ndarray, sizes) -> dict[int, np.ndarray]:
    """Batched leading principal minors det(mat[:j,:j]) for each j in sizes."""
    return {j: np.linalg.det(mat[:, :j, :j]) for j in sizes}


def _trailing_minors(mat: np.ndarray, sizes) -> dict[int, np.ndarray]:
    rows, cols = mat.shape[-2], mat.shape[-1]
    return {j: np.linalg.det(mat[:, rows - j:, cols - j:]) for j in sizes}


def eval_poly(poly: MinorPolynomial, z1: np.ndarray,
              z2: np.ndarray) -> np.ndarray:
    """Evaluate the integrand on batched blocks z1 (B,a,k), z2 (B,b,k).

    kind I: products of leading minors of z1^T conj(z1) and trailing
    minors of z2^T conj(z2).  kind QQ: Q(z) * Qtilde(w) with w the
    conjugated swap (z2-bar stacked over z1-bar).
    """
    ctx = poly.ctx
    e_tau, e_nu = poly.exponents()
    batch = z1.shape[0] if ctx.a else z2.shape[0]
    out = np.ones(batch, dtype=complex)
    if poly.kind == "I":
        if ctx.a:
            gram1 = np.einsum("bik,bil->bkl", z1, np.conj(z1))
            minors = _leading_minors(gram1, range(1, ctx.a + 1))
            for j, e in enumerate(e_tau, start=1):
                if e:
                    out = out * minors[j] ** e
        if ctx.b:
            gram2 = np.einsum("bik,bil->bkl", z2, np.conj(z2))
            minors = _trailing_minors(gram2, range(1, ctx.b + 1))
            for j, e in enumerate(e_nu, start=1):
                if e:
                    out = out * minors[j] ** e
        return out
    # kind QQ: z has blocks (z1; z2), w = (conj(z2); conj(z1)) with rows
    # reversed inside each block and columns reversed globally.  The
    # reversals (longest Weyl elements) are forced: the literal block swap
    # alone pairs leading columns of z against trailing columns of conj(z),
    # whose Gaussian expectation vanishes identically.  With them,
    # Qtilde(w) == conj(Q(z)) minor by minor, so the estimated constant is
    # the squared Gaussian norm of Q; the pi-ratio check against
    # dimGL(a) * dimGL(b) validates this reading.
    z = np.concatenate([z1, z2], axis=1)
    w = np.concatenate([np.conj(z2)[:, ::-1], np.conj(z1)[:, ::-1]],
                       axis=1)[:, :, ::-1]
    lead_z = _leading_minors(z, range(1, ctx.a + 1))
    trail_z = _trailing_minors(z, range(1, ctx.b + 1))
    lead_w = _leading_minors(w, range(1, ctx.b + 1))
    trail_w = _trailing_minors(w, range(1, ctx.a + 1))
    for j, e in enumerate(e_tau, start=1):
        if e:
            out = out * lead_z[j] ** e * trail_w[j] ** e
    for j, e in enumerate(e_nu, start=1):
        if e:
            out = out * trail_z[j] ** e * lead_w[j] ** e
    return out


def sample_matrix(rows: int, cols: int, rng: np.random.Generator,
                  batch: int) -> np.ndarray:
    """Batched (batch, rows, cols) complex Gaussians with E[|z|^2] = 1/pi."""
    scale = math.sqrt(1.0 / (2.0 * math.pi))
    re = rng.normal(0.0, scale, size=(batch, rows, cols))
    im = rng.normal(0.0, scale, size=(batch, rows, cols))
    return re + 1j * im


def _batch_rng(seed: int, batch_index: int) -> np.random.Generator:
    # Philox is counter-based; keying by (seed, batch index) gives
    # independent streams with schedule-free reproducibility.
    return np.random.Generator(np.random.Philox(key=(seed << 64) + batch_index))


def _batch_means(polys, cfg: OracleConfig) -> np.ndarray:
    """(n_batches, len(polys)) matrix of per-batch means (real parts),
    all polynomials evaluated on the same sample stream."""
    ctx = polys[0].ctx
    a, b, k = ctx.a, ctx.b, ctx.k

    def one_batch(index: int) -> np.ndarray:
        rng = _batch_rng(cfg.seed, index)
        z1 = sample_matrix(a, k, rng, cfg.batch_size)
        z2 = sample_matrix(b, k, rng, cfg.batch_size)
        return np.array([eval_poly(p, z1, z2).real.mean() for p in polys])

    indices = range(cfg.n_batches)
    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            rows = list(pool.map(one_batch, indices))
    else:
        rows = [one_batch(i) for i in indices]
    return np.stack(rows)


def variance_warning(poly: MinorPolynomial) -> str | None:
    if poly.total_exponent() > VARIANCE_EXPONENT_BOUND \
            or poly.ctx.k > VARIANCE_K_BOUND:
        return (f"high-variance regime: total exponent "
                f"{poly.total_exponent()}, k={poly.ctx.k}; "
                "expect slow convergence")
    return None


def mc_estimate(poly: MinorPolynomial, cfg: OracleConfig) -> MCEstimate:
    """Batch-mean estimator with stderr from the batch variance."""
    if poly.is_constant():
        return MCEstimate(1.0, 0.0, cfg.samples, cfg.seed)
    means = _batch_means([poly], cfg)[:, 0]
    stderr = 0.0
    if len(means) > 1:
        stderr = float(means.std(ddof=1) / math.sqrt(len(means)))
    return MCEstimate(float(means.mean()), stderr, cfg.samples, cfg.seed)


@dataclass(frozen=True)
class PiRatioReport:
    ratio: float
    stderr: float
    target: int
    numerator: MCEstimate
    denominator: MCEstimate

    @property
    def z_score(self) -> float:
        if self.stderr == 0:
            if math.isclose(self.ratio, self.target, rel_tol=1e-12):
                return 0.0
            return math.inf
        return abs(self.ratio - self.target) / self.stderr


def verify_pi_ratio(ctx: ZetaContext, cfg: OracleConfig) -> PiRatioReport:
    """Paired estimate of MC(I)/MC(Q tensor Qtilde); the projection identity
    predicts dim(GL(a),tau) * dim(GL(b),nu)."""
    poly_i = MinorPolynomial("I", ctx)
    poly_qq = MinorPolynomial("QQ", ctx)
    target = weyl_dim(ctx.tau) * weyl_dim(ctx.nu)
    if poly_i.is_constant():
        est = MCEstimate(1.0, 0.0, cfg.samples, cfg.seed)
        return PiRatioReport(1.0, 0.0, target, est, est)
    means = _batch_means([poly_i, poly_qq], cfg)
    nb = means.shape[0]
    mx, my = means[:, 0].mean(), means[:, 1].mean()
    est_x = MCEstimate(float(mx),
                       float(means[:, 0].std(ddof=1) / math.sqrt(nb)),
                       cfg.samples, cfg.seed)
    est_y = MCEstimate(float(my),
                       float(means[:, 1].std(ddof=1) / math.sqrt(nb)),
                       cfg.samples, cfg.seed)
    if abs(my) <= 5 * est_y.stderr:
        raise DegenerateDenominator(
            f"MC(QQ) = {my:.3g} within 5 stderr ({est_y.stderr:.3g}) of zero")
    ratio = mx / my
    cov = float(np.cov(means[:, 0], means[:, 1], ddof=1)[0, 1]) / nb
    var = (est_x.stderr ** 2 + ratio ** 2 * est_y.stderr ** 2
           - 2 * ratio * cov) / my ** 2
    stderr = math.sqrt(max(var, 0.0))
    return PiRatioReport(float(ratio), stderr, target, est_x, est_y)


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("ARCH_ZETA_THREADS", "1")))
    except ValueError:
        return 1
