"""Gaussian-process Bayesian minimization.

Ordinary-kriging posterior with a Gaussian kernel, constant (best linear
unbiased predictor) mean, Tikhonov-regularized covariance, and a
probability-of-improvement acquisition (mu_post - f_min) / sigma_post that
is minimized over the search box.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from ..core.sample import make_rng


class SingularCovarianceError(RuntimeError):
    pass


def gaussian_kernel(x1: np.ndarray, x2: np.ndarray, lengths: np.ndarray) -> np.ndarray:
    d = (x1[:, None, :] - x2[None, :, :]) / lengths[None, None, :]
    return np.exp(-0.5 * np.sum(d * d, axis=2))


@dataclass
class GpModel:
    xs: np.ndarray          # (n, dim)
    zs: np.ndarray          # (n,)
    lengths: np.ndarray     # (dim,)
    tikhonov: float = 1e-10
    data_variance: float = 0.0

    def covariance(self) -> np.ndarray:
        n = self.xs.shape[0]
        return (gaussian_kernel(self.xs, self.xs, self.lengths)
                + (self.tikhonov + self.data_variance) * np.eye(n))

    def _solve(self):
        c = self.covariance()
        try:
            cinv = np.linalg.inv(c)
        except np.linalg.LinAlgError as exc:
            raise SingularCovarianceError("covariance matrix cannot be inverted") from exc
        cond = np.linalg.cond(c)
        if not np.isfinite(cond) or cond > 1e14:
            raise SingularCovarianceError("covariance matrix is numerically singular")
        return c, cinv

    def blup_mean(self) -> float:
        _, cinv = self._solve()
        one = np.ones(len(self.zs))
        return float((one @ cinv @ self.zs) / (one @ cinv @ one))


def gp_posterior(model: GpModel, x: np.ndarray):
    """Posterior (mean, variance) at query points x of shape (m, dim)."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    c, cinv = model._solve()
    one = np.ones(len(model.zs))
    mu = (one @ cinv @ model.zs) / (one @ cinv @ one)
    kq = gaussian_kernel(x, model.xs, model.lengths)  # (m, n)
    mean = mu + kq @ cinv @ (model.zs - mu * one)
    # ordinary-kriging variance with the mean-estimation correction term
    prior = 1.0 + model.data_variance
    var = prior - np.einsum("ij,jk,ik->i", kq, cinv, kq)
    corr = (1.0 - kq @ cinv @ one) ** 2 / (one @ cinv @ one)
    var = np.maximum(var + corr, 0.0)
    return mean, var


def _log_likelihood(model: GpModel) -> float:
    try:
        c, cinv = model._solve()
    except SingularCovarianceError:
        return -np.inf
    one = np.ones(len(model.zs))
    mu = (one @ cinv @ model.zs) / (one @ cinv @ one)
    r = model.zs - mu * one
    sign, logdet = np.linalg.slogdet(c)
    if sign <= 0:
        return -np.inf
    return float(-0.5 * r @ cinv @ r - 0.5 * logdet)


def fit_lengths(xs, zs, tikhonov, data_variance, seed=0, restarts=8):
    """Multi-start local maximization of the Gaussian log-likelihood over
    log length-scales."""
    xs = np.atleast_2d(xs)
    dim = xs.shape[1]
    rng = make_rng(seed, stream=7)
    span = max(np.ptp(xs, axis=0).max(), 1e-2)

    def neg_ll(log_l):
        m = GpModel(xs, zs, np.exp(log_l), tikhonov, data_variance)
        return -_log_likelihood(m)

    best, best_val = np.full(dim, np.log(span)), np.inf
    for k in range(restarts):
        x0 = np.log(span) + rng.normal(0, 1.0, size=dim)
        res = minimize(neg_ll, x0, method="Nelder-Mead",
                       options={"maxiter": 200, "xatol": 1e-3, "fatol": 1e-6})
        if res.fun < best_val:
            best, best_val = res.x, res.fun
    return np.exp(best)


@dataclass
class BayesTrace:
    xs: list = field(default_factory=list)
    values: list = field(default_factory=list)
    status: str = "ok"

    @property
    def best_x(self):
        return self.xs[int(np.argmin(self.values))]

    @property
    def best_value(self):
        return float(np.min(self.values))


def bayesian_minimize(f, domain, tikhonov: float, iterations: int,
                      data_variance: float = 0.0, seed: int = 0,
                      n_init: int = 4, grid_per_dim: int = 40) -> BayesTrace:
    """Sequential minimization inside a box ``domain`` = [(lo, hi), ...].

    Each iteration refits kernel length-scales, minimizes the
    probability-of-improvement acquisition (grid scan + local polish), and
    evaluates f at the proposed point. A singular covariance (e.g. at
    tikhonov=0 with colliding points) is reported via trace.status.
    """
    domain = np.asarray(domain, dtype=float)
    dim = domain.shape[0]
    rng = make_rng(seed, stream=11)
    trace = BayesTrace()
    for _ in range(n_init):
        x = domain[:, 0] + rng.random(dim) * (domain[:, 1] - domain[:, 0])
        trace.xs.append(x)
        trace.values.append(float(f(x)))

    for _ in range(iterations):
        xs = np.array(trace.xs)
        zs = np.array(trace.values)
        try:
            lengths = fit_lengths(xs, zs, tikhonov, data_variance, seed)
            model = GpModel(xs, zs, lengths, tikhonov, data_variance)
            f_min = zs.min()

            def acq(x):
                mean, var = gp_posterior(model, x)
                sig = np.sqrt(var)
                out = np.full(mean.shape, np.inf)
                ok = sig > 1e-12  # guard the sigma -> 0 divergence
                out[ok] = (mean[ok] - f_min) / sig[ok]
                return out

            # dense grid scan
            axes = [np.linspace(lo, hi, grid_per_dim) for lo, hi in domain] \
                if dim <= 2 else None
            if axes is not None:
                mesh = np.meshgrid(*axes, indexing="ij")
                cand = np.stack([m.ravel() for m in mesh], axis=1)
            else:
                cand = domain[:, 0] + rng.random((grid_per_dim**2, dim)) * \
                    (domain[:, 1] - domain[:, 0])
            vals = acq(cand)
            x0 = cand[int(np.argmin(vals))]
            res = minimize(lambda x: float(acq(np.atleast_2d(x))[0]), x0,
                           method="Nelder-Mead",
                           options={"maxiter": 100, "xatol": 1e-6})
            x_next = np.clip(res.x, domain[:, 0], domain[:, 1])
        except SingularCovarianceError:
            trace.status = "singular_covariance"
            return trace
        trace.xs.append(x_next)
        trace.values.append(float(f(x_next)))
    return trace
