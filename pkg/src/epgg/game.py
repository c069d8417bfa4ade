"""Extended public goods game: utilities, payoff tensors, and matrix analysis.

The stage game: each of ``n`` players holds an endowment ``c_i`` and either
contributes it to a common pool (cooperate) or keeps it (defect).  The pool is
scaled by a payoff factor ``f`` and split equally among all players, so

    u_i(a, f, c) = (1/n) * sum_j c_j * a_j * f  +  c_i * (1 - a_i)

with actions encoded defect=0, cooperate=1.  Unlike the classic public goods
game, ``f`` ranges over the whole interval (0, r_plus), which produces four
qualitatively different regimes (see :func:`classify`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

DEFECT = 0
COOPERATE = 1

#: Action profile: one action per player, defect=0 / cooperate=1.
ActionProfile = tuple[int, ...]


@dataclass(frozen=True)
class GameSpec:
    """One stage-game instance: player count, endowments, payoff factor.

    ``r_plus`` is the nominal upper bound of the payoff factor range used when
    sampling game instances; ``utility`` itself accepts any f > 0 because
    noisy observations of f routinely exceed the bound and downstream code
    evaluates imagined payoffs at those observed values.
    """

    n: int
    endowments: tuple[float, ...]
    f: float
    r_plus: float = 5.0

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need at least 2 players, got n={self.n}")
        if len(self.endowments) != self.n:
            raise ValueError(
                f"endowments length {len(self.endowments)} != n={self.n}"
            )
        if any(c < 0 for c in self.endowments):
            raise ValueError("endowments must be nonnegative")
        if not self.f > 0:
            raise ValueError(f"payoff factor must be positive, got f={self.f}")
        if not self.r_plus > 0:
            raise ValueError(f"r_plus must be positive, got {self.r_plus}")


def _validate_profile(profile: ActionProfile, n: int) -> None:
    if len(profile) != n:
        raise ValueError(f"profile length {len(profile)} != n={n}")
    if any(a not in (DEFECT, COOPERATE) for a in profile):
        raise ValueError(f"actions must be 0 or 1, got {profile!r}")


def utility(profile: ActionProfile, spec: GameSpec) -> np.ndarray:
    """Utility vector for one joint action profile.

    Returns an array of length ``spec.n``; entry i is player i's payoff.
    """
    _validate_profile(profile, spec.n)
    a = np.asarray(profile, dtype=np.float64)
    c = np.asarray(spec.endowments, dtype=np.float64)
    pool_share = float(np.dot(c, a)) * spec.f / spec.n
    return pool_share + c * (1.0 - a)


def payoff_matrix(spec: GameSpec) -> np.ndarray:
    """Payoff tensor for the two-player game, indexed [a_row][a_col][player].

    Indices are action values, so entry [1][0] is the (cooperate, defect)
    cell.  Only defined for n=2.
    """
    if spec.n != 2:
        raise ValueError(f"payoff_matrix requires n=2, got n={spec.n}")
    m = np.empty((2, 2, 2), dtype=np.float64)
    for a_row in (DEFECT, COOPERATE):
        for a_col in (DEFECT, COOPERATE):
            m[a_row, a_col] = utility((a_row, a_col), spec)
    return m


class Regime(Enum):
    """Strategic regime of an instance, determined by f relative to n."""

    COMPETITIVE = "competitive"  # f < 1: contributing destroys value
    BOUNDARY = "boundary"        # f = 1: pure redistribution
    MIXED_MOTIVE = "mixed"       # 1 < f < n: social dilemma
    COOPERATIVE = "cooperative"  # f >= n: contributing dominates


def classify(f: float, n: int) -> Regime:
    if not f > 0:
        raise ValueError(f"payoff factor must be positive, got f={f}")
    if n < 2:
        raise ValueError(f"need at least 2 players, got n={n}")
    if f < 1.0:
        return Regime.COMPETITIVE
    if f == 1.0:
        return Regime.BOUNDARY
    if f < n:
        return Regime.MIXED_MOTIVE
    return Regime.COOPERATIVE


@dataclass(frozen=True)
class MatrixAnalysis:
    """Equilibrium structure of one instance, by exhaustive enumeration.

    ``dominant`` holds strict dominant-strategy equilibria: profiles in which
    every player's action strictly dominates their other action.  ``nash``
    holds pure-strategy equilibria (no strictly improving unilateral
    deviation).  ``pareto_optimal`` holds profiles not Pareto-dominated by any
    other profile.  Every dominant profile is also Nash.
    """

    regime: Regime
    dominant: frozenset[ActionProfile]
    nash: frozenset[ActionProfile]
    pareto_optimal: frozenset[ActionProfile]


def analyze(spec: GameSpec) -> MatrixAnalysis:
    profiles = list(itertools.product((DEFECT, COOPERATE), repeat=spec.n))
    payoff = {p: utility(p, spec) for p in profiles}

    def replaced(profile: ActionProfile, i: int, a: int) -> ActionProfile:
        return profile[:i] + (a,) + profile[i + 1 :]

    nash = frozenset(
        p
        for p in profiles
        if all(
            payoff[replaced(p, i, 1 - p[i])][i] <= payoff[p][i]
            for i in range(spec.n)
        )
    )

    def strictly_dominant(i: int, a: int) -> bool:
        # a beats 1-a for player i against every opponent profile
        return all(
            payoff[replaced(p, i, a)][i] > payoff[replaced(p, i, 1 - a)][i]
            for p in profiles
        )

    dominant = frozenset(
        p for p in profiles if all(strictly_dominant(i, p[i]) for i in range(spec.n))
    )

    def dominated(p: ActionProfile) -> bool:
        return any(
            np.all(payoff[q] >= payoff[p]) and np.any(payoff[q] > payoff[p])
            for q in profiles
            if q != p
        )

    pareto = frozenset(p for p in profiles if not dominated(p))
    return MatrixAnalysis(
        regime=classify(spec.f, spec.n),
        dominant=dominant,
        nash=nash,
        pareto_optimal=pareto,
    )
