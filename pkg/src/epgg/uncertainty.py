"""Gaussian observation noise on the payoff factor.

Agents never see the true f during training when sigma > 0; each agent, each
round, receives an independent draw

    f_obs = max(0, f + N(0, sigma^2))

clipped at zero because a negative payoff factor has no meaning in the game.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class NoiseModel:
    sigma: float

    def __post_init__(self) -> None:
        if self.sigma < 0:
            raise ValueError(f"sigma must be nonnegative, got {self.sigma}")


def observe(f: float, model: NoiseModel, rng: np.random.Generator) -> float:
    """One noisy observation of f.  Exact (and draw-free) when sigma is 0;
    otherwise consumes one Gaussian draw."""
    if not f > 0:
        raise ValueError(f"payoff factor must be positive, got f={f}")
    if model.sigma == 0.0:
        return f
    return max(0.0, f + rng.normal(0.0, model.sigma))


def observe_block(
    f: float, model: NoiseModel, rng: np.random.Generator, size: int
) -> np.ndarray:
    """Vector of independent observations; bit-identical to calling
    :func:`observe` ``size`` times on the same generator."""
    if not f > 0:
        raise ValueError(f"payoff factor must be positive, got f={f}")
    if model.sigma == 0.0:
        return np.full(size, f, dtype=np.float64)
    return np.maximum(0.0, f + rng.normal(0.0, model.sigma, size=size))
