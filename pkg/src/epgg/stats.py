"""Run-level summaries and Welch's unequal-variance t test.

The two-sided p value uses the identity  p = I_x(df/2, 1/2)  with
x = df / (df + t^2), where I is the regularized incomplete beta function,
evaluated here with the standard continued-fraction expansion (modified
Lentz).  No statistics library is required at runtime; the test suite checks
the CDF against direct numerical quadrature.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING, NamedTuple, Sequence

import numpy as np

if TYPE_CHECKING:  # pragma: no cover
    from .sim import MetricSeries

_CF_EPS = 3e-16
_CF_FPMIN = 1e-300
_CF_MAX_ITER = 300


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta function (Lentz's method).
    Converges fast when x < (a + 1) / (a + b + 2)."""
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_FPMIN:
        d = _CF_FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_FPMIN:
            d = _CF_FPMIN
        c = 1.0 + aa / c
        if abs(c) < _CF_FPMIN:
            c = _CF_FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_FPMIN:
            d = _CF_FPMIN
        c = 1.0 + aa / c
        if abs(c) < _CF_FPMIN:
            c = _CF_FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ArithmeticError(f"incomplete beta did not converge for a={a} b={b} x={x}")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if a <= 0 or b <= 0:
        raise ValueError("shape parameters must be positive")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must be in [0, 1], got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def student_t_two_sided_p(t: float, df: float) -> float:
    """P(|T| >= |t|) for T Student-t distributed with ``df`` degrees of
    freedom (df need not be an integer)."""
    if df <= 0:
        raise ValueError(f"degrees of freedom must be positive, got {df}")
    x = df / (df + t * t)
    return regularized_incomplete_beta(df / 2.0, 0.5, x)


class WelchResult(NamedTuple):
    t: float
    df: float
    p: float


def welch_t_test(xs: Sequence[float], ys: Sequence[float]) -> WelchResult:
    """Two-sided Welch t test with the Welch-Satterthwaite df approximation.

    Raises ValueError when either sample has fewer than two points or when
    both sample variances are zero (the statistic is undefined).
    """
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.size < 2 or y.size < 2:
        raise ValueError("each sample needs at least two observations")
    vx = float(np.var(x, ddof=1)) / x.size
    vy = float(np.var(y, ddof=1)) / y.size
    if vx == 0.0 and vy == 0.0:
        raise ValueError("degenerate samples: both variances are zero")
    se2 = vx + vy
    t = (float(x.mean()) - float(y.mean())) / math.sqrt(se2)
    df = se2 * se2 / (vx * vx / (x.size - 1) + vy * vy / (y.size - 1))
    return WelchResult(t=t, df=df, p=student_t_two_sided_p(t, df))


class Summary(NamedTuple):
    mean: float
    std: float


def run_level_means(series: "MetricSeries", f: float, last_k: int = 50) -> np.ndarray:
    """Per-run cooperation at evaluation factor ``f``, averaged over the last
    ``last_k`` epochs (clipped to the available horizon)."""
    if last_k < 1:
        raise ValueError(f"last_k must be >= 1, got {last_k}")
    idx = [i for i, v in enumerate(series.eval_f) if math.isclose(v, f)]
    if not idx:
        raise ValueError(f"f={f} not among evaluation factors {series.eval_f}")
    k = min(last_k, series.eval_coop.shape[1])
    return series.eval_coop[:, -k:, idx[0]].mean(axis=1)


def summarize(series: "MetricSeries", f: float, last_k: int = 50) -> Summary:
    """Cross-run mean and sample std (ddof=1) of the run-level cooperation
    means at factor ``f``.  A single-run series reports std 0."""
    means = run_level_means(series, f, last_k)
    std = float(np.std(means, ddof=1)) if means.size > 1 else 0.0
    return Summary(mean=float(means.mean()), std=std)
