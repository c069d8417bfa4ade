"""Social norms: reputation assignment and the norm-following steering policy.

Reputations are public binary labels (bad=0, good=1).  The base norm rewards
cooperation with good opponents and defection against bad ones:

    base_norm(action, opponent_rep) = 1  iff  (action, opponent_rep)
                                           is (C, good) or (D, bad)

Because cooperation destroys value when f < 1, the game-aware norm freezes
reputations there instead of applying the base rule:

    epgg_norm(f, action, own_rep, opponent_rep) = base_norm(...)  if f >= 1
                                                  own_rep         otherwise

Assignment is noisy: with probability chi the assigned bit is flipped.
Steering agents simply follow the norm: cooperate exactly when the observed
factor makes cooperation norm-approved and the opponent is in good standing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .game import COOPERATE, DEFECT

BAD = 0
GOOD = 1


@dataclass(frozen=True)
class NormParams:
    """Reputation assignment error probability."""

    chi: float = 0.001

    def __post_init__(self) -> None:
        if not 0.0 <= self.chi <= 1.0:
            raise ValueError(f"chi must be in [0, 1], got {self.chi}")


def _check_bit(value: int, name: str) -> None:
    if value not in (0, 1):
        raise ValueError(f"{name} must be 0 or 1, got {value!r}")


def base_norm(action: int, opponent_rep: int) -> int:
    """Norm verdict ignoring the game regime: good iff the action matches
    what the opponent's standing deserves."""
    _check_bit(action, "action")
    _check_bit(opponent_rep, "opponent_rep")
    return GOOD if action == opponent_rep else BAD


def epgg_norm(f: float, action: int, own_rep: int, opponent_rep: int) -> int:
    """Regime-aware norm: the base norm where cooperation creates value
    (f >= 1), the agent's current reputation (frozen) where it does not.
    The gate is the TRUE payoff factor of the round, never an observation."""
    if not f > 0:
        raise ValueError(f"payoff factor must be positive, got f={f}")
    _check_bit(own_rep, "own_rep")
    if f < 1.0:
        return own_rep
    return base_norm(action, opponent_rep)


def assign_reputation(
    f: float,
    action: int,
    own_rep: int,
    opponent_rep: int,
    params: NormParams,
    rng: np.random.Generator,
) -> int:
    """New reputation after one round: the norm verdict, flipped with
    probability params.chi.  Consumes exactly one uniform draw per call."""
    verdict = epgg_norm(f, action, own_rep, opponent_rep)
    if rng.random() < params.chi:
        return 1 - verdict
    return verdict


def steering_action(f_obs: float, opponent_rep: int) -> int:
    """Fixed norm-following policy: cooperate iff the observed factor is at
    least 1 and the opponent is in good standing."""
    _check_bit(opponent_rep, "opponent_rep")
    return COOPERATE if (f_obs >= 1.0 and opponent_rep == GOOD) else DEFECT
