"""Round rewards: the game payoff, optionally blended with an intrinsic
self-play term.

With the intrinsic formulation enabled, the training reward for agent i is

    R_i = beta * u_i(joint, f, c) + (1 - beta) * u_i((a', a'), f_obs, c)

where a' is an imagined action drawn from the agent's own current behavior
policy (epsilon-greedy) conditioned on the agent's observation and, when the
reputation mechanism is on, the agent's own reputation: the imagined opponent
is the agent itself.  The imagined payoff is evaluated at the observed factor,
which may be 0 after noise clipping.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .agents import Agent, Observation
from .game import GameSpec, utility


@dataclass(frozen=True)
class RewardParams:
    """``beta`` weights the real payoff against the imagined one; it only
    matters when the intrinsic term is on (disabled is equivalent to beta=1).
    ``reputation_observed`` states whether learner policies condition on
    reputation bits."""

    beta: float = 0.1
    intrinsic_enabled: bool = False
    reputation_observed: bool = False

    def __post_init__(self) -> None:
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must be in [0, 1], got {self.beta}")


def _self_play_payoff(a: int, f_obs: float, endowments: tuple[float, ...], own_index: int) -> float:
    # u_i of the all-a profile in a game against copies of oneself, at the
    # observed factor; f_obs may be 0.  The pool share collapses to c*a*f.
    c = float(endowments[own_index])
    return c * a * f_obs + c * (1 - a)


def round_reward(
    agent: Agent,
    own_action: int,
    joint_profile: tuple[int, ...],
    true_f: float,
    f_obs: float,
    own_rep: int,
    endowments: tuple[float, ...],
    params: RewardParams,
    rng: np.random.Generator | None = None,
) -> float:
    """Training reward for one round.  ``joint_profile`` lists the acting
    agent first.  Consumes the agent's behavior-policy draws (one uniform and
    one integer) iff the intrinsic term is enabled."""
    if joint_profile[0] != own_action:
        raise ValueError("joint_profile must list the acting agent first")
    if f_obs < 0:
        raise ValueError(f"observed factor must be nonnegative, got {f_obs}")
    spec = GameSpec(n=len(joint_profile), endowments=endowments, f=true_f)
    u_real = float(utility(joint_profile, spec)[0])
    if not params.intrinsic_enabled:
        return u_real
    obs = Observation(f_obs, own_rep if params.reputation_observed else None)
    a_prime = agent.act(obs, "explore", rng)
    u_imagined = _self_play_payoff(a_prime, f_obs, endowments, own_index=0)
    return params.beta * u_real + (1.0 - params.beta) * u_imagined
