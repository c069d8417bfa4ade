"""Simulation engine: pools, per-epoch interactions, evaluation, experiments.

An experiment is ``runs`` independent repetitions.  Each repetition builds a
pool of agents and trains for ``epochs`` epochs.  Per epoch, two distinct
agents are drawn uniformly, one payoff factor f is sampled, and the pair plays
``rounds`` one-shot games: each agent receives its own (possibly noisy)
observation of f, acts epsilon-greedily, collects a reward, and both
reputations are updated from the true f through the noisy norm.  Learners
apply their buffered updates once the interaction ends, and a side-effect-free
greedy evaluation over the evaluation factors closes the epoch.

Randomness is split into named substreams per (run, purpose, agent) via
``numpy.random.SeedSequence`` spawn keys, so toggling one mechanism (noise,
reputation, intrinsic rewards) never perturbs the draws of another, and a
sigma=0 run is bit-identical to the same run with the noise pipeline removed.
The engine consumes each stream in per-epoch blocks (numpy block draws match
repeated scalar draws bit for bit): per active learner and epoch, first the
observation block, then one uniform block and one integer block for
exploration, one uniform block for reputation flips, and, when intrinsic
rewards are enabled, one uniform plus one integer block for self-play draws.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple, Sequence, Union

import numpy as np

from .agents import (
    Agent,
    DqnLearner,
    ExplorationSchedule,
    Mlp,
    Observation,
    QTable,
    SteeringAgent,
    TabularLearner,
    Transition,
    dqn_pass,
)
from .norms import GOOD, steering_action
from .uncertainty import NoiseModel, observe_block

EVAL_FACTORS_DEFAULT = (0.5, 1.0, 1.5, 3.5)


class InvalidConfigError(ValueError):
    """Configuration that cannot produce a well-defined experiment."""


@dataclass(frozen=True)
class FRange:
    """Continuous training range for the payoff factor (uniform sampling)."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not 0 < self.lo <= self.hi:
            raise InvalidConfigError(f"need 0 < lo <= hi, got [{self.lo}, {self.hi}]")


TrainingFactors = Union[tuple[float, ...], FRange]


@dataclass(frozen=True)
class ExperimentConfig:
    """Full description of one experimental condition.

    ``training_f`` and the epsilon schedule default per algorithm: the
    tabular learner trains on the discrete evaluation factors with constant
    epsilon 0.01, the network learner on the continuous range [0.5, 3.5]
    with epsilon decaying linearly from 0.1 to 0.001 over the horizon.
    """

    algo: Literal["tabular", "dqn"] = "dqn"
    pool_size: int = 10
    endowment: float = 4.0
    epochs: int = 10000
    rounds: int = 200
    runs: int = 20
    reputation_enabled: bool = False
    intrinsic_enabled: bool = False
    steering_fraction: float = 0.0
    sigma: float = 0.0
    beta: float = 0.1
    alpha: float = 0.01
    gamma: float = 0.99
    chi: float = 0.001
    eps_start: float | None = None
    eps_end: float | None = None
    training_f: TrainingFactors | None = None
    eval_f: tuple[float, ...] = EVAL_FACTORS_DEFAULT
    eval_noise: bool = False
    eval_all_pairs: bool = False
    r_plus: float = 5.0
    q_init_scale: float = 1e-6
    initial_good_fraction: float = 1.0
    master_seed: int = 1

    def __post_init__(self) -> None:
        if self.algo not in ("tabular", "dqn"):
            raise InvalidConfigError(f"unknown algo {self.algo!r}")
        if self.eps_start is None:
            object.__setattr__(self, "eps_start", 0.01 if self.algo == "tabular" else 0.1)
        if self.eps_end is None:
            object.__setattr__(
                self, "eps_end", 0.01 if self.algo == "tabular" else 0.001
            )
        if self.training_f is None:
            default = tuple(self.eval_f) if self.algo == "tabular" else FRange(0.5, 3.5)
            object.__setattr__(self, "training_f", default)
        if isinstance(self.training_f, (list, tuple)):
            object.__setattr__(self, "training_f", tuple(float(v) for v in self.training_f))
        object.__setattr__(self, "eval_f", tuple(float(v) for v in self.eval_f))
        self._validate()

    def _validate(self) -> None:
        c = self
        checks: list[tuple[bool, str]] = [
            (c.pool_size >= 2, f"pool_size must be >= 2, got {c.pool_size}"),
            (c.epochs >= 1, f"epochs must be >= 1, got {c.epochs}"),
            (c.rounds >= 1, f"rounds must be >= 1, got {c.rounds}"),
            (c.runs >= 1, f"runs must be >= 1, got {c.runs}"),
            (c.endowment > 0, f"endowment must be positive, got {c.endowment}"),
            (0 <= c.steering_fraction <= 1,
             f"steering_fraction must be in [0, 1], got {c.steering_fraction}"),
            (c.sigma >= 0, f"sigma must be nonnegative, got {c.sigma}"),
            (0 <= c.beta <= 1, f"beta must be in [0, 1], got {c.beta}"),
            (c.alpha > 0, f"alpha must be positive, got {c.alpha}"),
            (0 <= c.gamma <= 1, f"gamma must be in [0, 1], got {c.gamma}"),
            (0 <= c.chi <= 1, f"chi must be in [0, 1], got {c.chi}"),
            (0 <= c.eps_end <= c.eps_start <= 1,
             "epsilon schedule needs 0 <= eps_end <= eps_start <= 1"),
            (len(c.eval_f) > 0 and all(v > 0 for v in c.eval_f),
             f"eval_f must be positive factors, got {c.eval_f}"),
            (c.q_init_scale >= 0,
             f"q_init_scale must be nonnegative, got {c.q_init_scale}"),
            (0 <= c.initial_good_fraction <= 1,
             f"initial_good_fraction must be in [0, 1], got {c.initial_good_fraction}"),
            (c.r_plus > 0, f"r_plus must be positive, got {c.r_plus}"),
        ]
        if isinstance(c.training_f, FRange):
            if c.algo == "tabular":
                checks.append((False, "tabular learners need a discrete training_f set"))
        else:
            checks.append(
                (len(c.training_f) > 0 and all(v > 0 for v in c.training_f),
                 f"training_f must be positive factors, got {c.training_f}"),
            )
        if c.algo == "tabular":
            checks.append((c.sigma == 0,
                           "tabular learners cannot take noisy (continuous) observations; sigma must be 0"))
            checks.append((not c.eval_noise,
                           "tabular learners cannot take noisy evaluation observations"))
        for ok, msg in checks:
            if not ok:
                raise InvalidConfigError(msg)

    def schedule(self) -> ExplorationSchedule:
        kind = "constant" if self.eps_start == self.eps_end else "linear"
        return ExplorationSchedule(kind, self.eps_start, self.eps_end, horizon=self.epochs)

    def steering_count(self) -> int:
        return int(round(self.steering_fraction * self.pool_size))


# substream purposes; one independent generator per (run, purpose, agent)
_ENGINE, _INIT, _NOISE, _ACTION, _REPUTATION, _INTRINSIC, _UPDATE, _EVAL_NOISE = range(8)


class RunStreams:
    """Named random substreams for one run, independent by construction."""

    def __init__(self, master_seed: int, run_index: int, pool_size: int):
        def gen(purpose: int, agent: int = 0) -> np.random.Generator:
            ss = np.random.SeedSequence(master_seed, spawn_key=(run_index, purpose, agent))
            return np.random.default_rng(ss)

        self.engine = gen(_ENGINE)
        self.init = [gen(_INIT, a) for a in range(pool_size)]
        self.noise = [gen(_NOISE, a) for a in range(pool_size)]
        self.action = [gen(_ACTION, a) for a in range(pool_size)]
        self.reputation = [gen(_REPUTATION, a) for a in range(pool_size)]
        self.intrinsic = [gen(_INTRINSIC, a) for a in range(pool_size)]
        self.update = [gen(_UPDATE, a) for a in range(pool_size)]
        self.eval_noise = [gen(_EVAL_NOISE, a) for a in range(pool_size)]


def build_pool(config: ExperimentConfig, streams: RunStreams) -> list[Agent]:
    """Fresh pool: the first round(steering_fraction * pool_size) slots hold
    steering agents, the rest learners.

    Each agent draws its starting reputation (good with probability
    ``initial_good_fraction``) from its own init stream before any other
    per-agent initialization, so the draw order is fixed regardless of agent
    kind.

    Tabular value tables start at jitter scaled by ``q_init_scale``.  When
    reputations are observable the social norm is part of the environment,
    and each (f, reputation) state's norm-prescribed response (cooperate with
    good standing at f >= 1, otherwise defect) starts with a prior value of
    the endowment — the payoff of simply keeping one's contribution — so the
    prescription holds until play produces real evidence against it; without
    the reputation mechanism there is no norm in play and the starting greedy
    actions fall randomly."""
    n_steer = config.steering_count()
    schedule = config.schedule()
    states: list = []
    favored: dict | None = None
    if config.algo == "tabular" and not isinstance(config.training_f, FRange):
        factors = sorted({*config.training_f, *config.eval_f})
        if config.reputation_enabled:
            states = [(f, r) for f in factors for r in (0, 1)]
            favored = {(f, r): steering_action(f, r) for f, r in states}
        else:
            states = list(factors)
    pool: list[Agent] = []
    for idx in range(config.pool_size):
        init_rng = streams.init[idx]
        if config.initial_good_fraction >= 1.0:
            rep0 = 1
        else:
            rep0 = int(init_rng.random() < config.initial_good_fraction)
        if idx < n_steer:
            pool.append(
                SteeringAgent(
                    agent_id=idx, endowment=config.endowment, reputation=rep0
                )
            )
        elif config.algo == "tabular":
            pool.append(
                TabularLearner(
                    agent_id=idx,
                    endowment=config.endowment,
                    schedule=schedule,
                    alpha=config.alpha,
                    gamma=config.gamma,
                    reputation=rep0,
                    table=QTable(
                        states,
                        rng=init_rng,
                        init_scale=config.q_init_scale,
                        favored=favored,
                        favored_value=config.endowment,
                    ),
                )
            )
        else:
            pool.append(
                DqnLearner(
                    agent_id=idx,
                    endowment=config.endowment,
                    schedule=schedule,
                    alpha=config.alpha,
                    gamma=config.gamma,
                    reputation=rep0,
                    net=Mlp(d_in=2 if config.reputation_enabled else 1,
                            rng=init_rng),
                )
            )
    return pool


def sample_training_f(config: ExperimentConfig, rng: np.random.Generator) -> float:
    if isinstance(config.training_f, FRange):
        return float(rng.uniform(config.training_f.lo, config.training_f.hi))
    values = config.training_f
    return float(values[int(rng.integers(0, len(values)))])


class EpochRecord(NamedTuple):
    epoch: int
    active: tuple[int, int]
    f: float
    train_coop: float
    eval_coop: np.ndarray  # aligned with config.eval_f


def _greedy_by_rep(agent: Agent, obs: np.ndarray, rep_observed: bool) -> np.ndarray:
    """Greedy actions for each round under both possible opponent
    reputations: shape (2, M) indexed [opponent_rep, round].  When learners do
    not observe reputations both rows coincide."""
    m = obs.shape[0]
    if isinstance(agent, SteeringAgent):
        coop = obs >= 1.0
        out = np.zeros((2, m), dtype=np.int64)
        out[1] = coop.astype(np.int64)
        return out
    if isinstance(agent, TabularLearner):
        out = np.empty((2, m), dtype=np.int64)
        # training observations are exact here (sigma 0 enforced), so one
        # lookup per reputation value covers the whole epoch
        f = float(obs[0])
        for rep in (0, 1):
            q = agent.table.values((f, rep) if rep_observed else f)
            out[rep] = int(q[1] > q[0])
        return out
    if isinstance(agent, DqnLearner):
        if rep_observed:
            x = np.empty((2 * m, 2), dtype=np.float64)
            x[:m, 0] = obs
            x[:m, 1] = 0.0
            x[m:, 0] = obs
            x[m:, 1] = 1.0
            q = agent.net.forward(x)
            return (q[:, 1] > q[:, 0]).astype(np.int64).reshape(2, m)
        q = agent.net.forward(obs[:, None])
        row = (q[:, 1] > q[:, 0]).astype(np.int64)
        return np.stack([row, row])
    # fallback for duck-typed agents (test stubs): one act() call per cell
    out = np.empty((2, m), dtype=np.int64)
    for rep in (0, 1):
        for t in range(m):
            o = Observation(float(obs[t]), rep if rep_observed else None)
            out[rep, t] = agent.act(o, "greedy", None)
    return out


# Engine-side value-net update: the exact pass dqn_update applies, shared so
# the array path and the per-agent buffer path cannot drift apart.
_dqn_update_arrays = dqn_pass


def run_epoch(
    pool: Sequence[Agent],
    config: ExperimentConfig,
    epoch_index: int,
    streams: RunStreams,
) -> EpochRecord:
    """One training epoch: pair selection, M rounds, learner updates, and a
    greedy evaluation snapshot."""
    if len(pool) < 2:
        raise InvalidConfigError(f"pool must hold at least 2 agents, got {len(pool)}")
    eng = streams.engine
    pair = eng.choice(len(pool), size=2, replace=False)
    ia, ib = int(pair[0]), int(pair[1])
    f = sample_training_f(config, eng)
    m = config.rounds
    noise = NoiseModel(config.sigma)
    rep_observed = config.reputation_enabled

    agents = (pool[ia], pool[ib])
    ids = (ia, ib)
    learner_mask = [not isinstance(a, SteeringAgent) for a in agents]
    for a in agents:
        a.epoch = epoch_index

    obs = [observe_block(f, noise, streams.noise[i], m) for i in ids]
    greedy = [_greedy_by_rep(a, o, rep_observed) for a, o in zip(agents, obs)]
    explore = [None, None]
    candidate = [None, None]
    for k, a in enumerate(agents):
        if learner_mask[k]:
            g = streams.action[ids[k]]
            explore[k] = g.random(m) < a.epsilon()
            candidate[k] = g.integers(0, 2, size=m)
    flips = [streams.reputation[i].random(m) < config.chi for i in ids]

    # round loop: resolve actions against current reputations, then update
    # both reputations simultaneously from the true f (the norm's gate is the
    # game, never the observation)
    actions = np.empty((2, m), dtype=np.int64)
    reps = np.empty((2, m), dtype=np.int64)  # standing when the round starts
    rep_a, rep_b = agents[0].reputation, agents[1].reputation
    freeze = f < 1.0
    for t in range(m):
        reps[0, t], reps[1, t] = rep_a, rep_b
        act_a = int(greedy[0][rep_b, t])
        if explore[0] is not None and explore[0][t]:
            act_a = int(candidate[0][t])
        act_b = int(greedy[1][rep_a, t])
        if explore[1] is not None and explore[1][t]:
            act_b = int(candidate[1][t])
        actions[0, t], actions[1, t] = act_a, act_b
        if not freeze:
            # below the threshold factor no judgment happens at all, so the
            # assignment error cannot fire either; standings carry over as-is
            new_a = int(act_a == rep_b)
            new_b = int(act_b == rep_a)
            rep_a = new_a ^ int(flips[0][t])
            rep_b = new_b ^ int(flips[1][t])
    agents[0].reputation, agents[1].reputation = rep_a, rep_b
    final_reps = (rep_a, rep_b)

    # rewards and updates, learners only
    c = config.endowment
    for k, agent in enumerate(agents):
        if not learner_mask[k]:
            continue
        other = 1 - k
        a_own = actions[k]
        a_opp = actions[other]
        u_real = 0.5 * c * (a_own + a_opp) * f + c * (1 - a_own)
        if config.intrinsic_enabled:
            g = streams.intrinsic[ids[k]]
            iu = g.random(m) < agent.epsilon()
            icand = g.integers(0, 2, size=m)
            own_rep_t = reps[k]
            self_greedy = (
                greedy[k][own_rep_t, np.arange(m)] if rep_observed else greedy[k][0]
            )
            a_prime = np.where(iu, icand, self_greedy)
            u_imagined = c * a_prime * obs[k] + c * (1 - a_prime)
            reward = config.beta * u_real + (1.0 - config.beta) * u_imagined
        else:
            reward = u_real.astype(np.float64)

        if isinstance(agent, DqnLearner):
            if rep_observed:
                x = np.column_stack([obs[k], reps[other].astype(np.float64)])
                next_rep = np.empty(m, dtype=np.float64)
                next_rep[:-1] = reps[other][1:]
                next_rep[-1] = final_reps[other]
                x_next = np.column_stack([np.append(obs[k][1:], obs[k][-1]), next_rep])
            else:
                x = obs[k][:, None].copy()
                x_next = np.append(obs[k][1:], obs[k][-1])[:, None]
            live = np.zeros(m, dtype=np.float64)
            _dqn_update_arrays(
                agent.net, x, a_own, reward, x_next, live,
                agent.alpha, agent.gamma, streams.update[ids[k]],
            )
        else:
            transitions = _transitions_from_arrays(
                obs[k], reps[other], final_reps[other], a_own, reward, rep_observed
            )
            for tr in transitions:
                agent.record(tr)
            agent.finish_interaction(streams.update[ids[k]])

    train_coop = float(actions.mean())
    eval_coop = evaluate(pool, (ia, ib), config, streams)
    return EpochRecord(epoch_index, (ia, ib), f, train_coop, eval_coop)


def _transitions_from_arrays(
    obs: np.ndarray,
    opp_reps: np.ndarray,
    opp_final_rep: int,
    actions: np.ndarray,
    rewards: np.ndarray,
    rep_observed: bool,
) -> list[Transition]:
    m = obs.shape[0]
    out = []
    for t in range(m):
        last = t == m - 1
        if rep_observed:
            o = Observation(float(obs[t]), int(opp_reps[t]))
            nxt_rep = int(opp_reps[t + 1]) if not last else opp_final_rep
            o_next = Observation(float(obs[t + 1] if not last else obs[t]), nxt_rep)
        else:
            o = Observation(float(obs[t]))
            o_next = Observation(float(obs[t + 1] if not last else obs[t]))
        # Every round is a one-shot game, so each transition closes its own
        # episode: the update target is the round reward alone.
        out.append(Transition(o, int(actions[t]), float(rewards[t]), o_next, True))
    return out


def _greedy_at(
    agent: Agent,
    seen: np.ndarray,
    opp_rep: int,
    rep_observed: bool,
) -> np.ndarray:
    """Greedy action of one agent at each factor in ``seen``."""
    n_f = seen.shape[0]
    if isinstance(agent, SteeringAgent):
        return ((seen >= 1.0) & (opp_rep == 1)).astype(np.int64)
    if isinstance(agent, TabularLearner):
        out = np.empty(n_f, dtype=np.int64)
        for j, fe in enumerate(seen):
            key = (float(fe), opp_rep) if rep_observed else float(fe)
            q = agent.table.values(key)
            out[j] = int(q[1] > q[0])
        return out
    if isinstance(agent, DqnLearner):
        if rep_observed:
            x = np.column_stack([seen, np.full(n_f, float(opp_rep))])
        else:
            x = seen[:, None]
        q = agent.net.forward(x)
        return (q[:, 1] > q[:, 0]).astype(np.int64)
    out = np.empty(n_f, dtype=np.int64)
    for j, fe in enumerate(seen):
        o = Observation(float(fe), opp_rep if rep_observed else None)
        out[j] = agent.act(o, "greedy", None)
    return out


def evaluate(
    pool: Sequence[Agent],
    active: tuple[int, int],
    config: ExperimentConfig,
    streams: RunStreams | None = None,
) -> np.ndarray:
    """Greedy cooperation at each evaluation factor.

    By default this probes the two active agents; with ``eval_all_pairs`` on
    it averages over every unordered learner pair for smoother curves.
    Observations are exact unless ``eval_noise`` is on (then they draw from
    dedicated streams).  When reputations are observable the probe presents a
    good-standing opponent, so the series measures each agent's cooperative
    disposition itself rather than the momentary label state of whoever it
    happens to stand next to (labels churn constantly wherever defection is
    the learned response, e.g. at the threshold factor, and a label-coupled
    probe would charge that churn against every other game).  No training
    state is touched.
    """
    f_eval = np.asarray(config.eval_f, dtype=np.float64)

    if config.eval_all_pairs:
        learners = [i for i, a in enumerate(pool) if not isinstance(a, SteeringAgent)]
        pairs = [(i, j) for n, i in enumerate(learners) for j in learners[n + 1 :]]
        if not pairs:
            pairs = [active]
    else:
        pairs = [active]

    total = np.zeros(f_eval.shape[0], dtype=np.float64)
    for i, j in pairs:
        coop = np.zeros(f_eval.shape[0], dtype=np.float64)
        for k, (me, other) in enumerate(((i, j), (j, i))):
            agent = pool[me]
            opp_rep = GOOD
            if config.eval_noise and config.sigma > 0:
                g = streams.eval_noise[me]
                seen = np.maximum(0.0, f_eval + g.normal(0.0, config.sigma, size=f_eval.shape[0]))
            else:
                seen = f_eval
            coop += _greedy_at(agent, seen, opp_rep, config.reputation_enabled)
        total += coop / 2.0
    return total / len(pairs)


@dataclass
class MetricSeries:
    """Per-run, per-epoch records for one condition: evaluation cooperation
    per factor, training cooperation, the sampled factor, and the active
    pair."""

    eval_f: tuple[float, ...]
    eval_coop: np.ndarray   # (runs, epochs, len(eval_f))
    train_coop: np.ndarray  # (runs, epochs)
    train_f: np.ndarray     # (runs, epochs)
    active: np.ndarray      # (runs, epochs, 2) agent ids


def run_single(
    config: ExperimentConfig, run_index: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """One repetition; returns (eval, train, f, active) per-epoch arrays."""
    streams = RunStreams(config.master_seed, run_index, config.pool_size)
    pool = build_pool(config, streams)
    eval_coop = np.empty((config.epochs, len(config.eval_f)), dtype=np.float64)
    train_coop = np.empty(config.epochs, dtype=np.float64)
    train_f = np.empty(config.epochs, dtype=np.float64)
    active = np.empty((config.epochs, 2), dtype=np.int16)
    for epoch in range(config.epochs):
        rec = run_epoch(pool, config, epoch, streams)
        eval_coop[epoch] = rec.eval_coop
        train_coop[epoch] = rec.train_coop
        train_f[epoch] = rec.f
        active[epoch] = rec.active
    return eval_coop, train_coop, train_f, active


def _run_single_star(args: tuple[ExperimentConfig, int]):
    return run_single(*args)


def run_experiment(config: ExperimentConfig, jobs: int = 1) -> MetricSeries:
    """All runs of one condition.  ``jobs`` > 1 fans runs out to worker
    processes; results are identical to the sequential order because every
    run derives its streams from (master_seed, run_index) alone."""
    if jobs > 1 and config.runs > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_single_star, [(config, r) for r in range(config.runs)]))
    else:
        results = []
        for r in range(config.runs):
            try:
                results.append(run_single(config, r))
            except Exception as exc:
                raise RuntimeError(f"run {r} failed: {exc}") from exc
    return MetricSeries(
        eval_f=tuple(config.eval_f),
        eval_coop=np.stack([r[0] for r in results]),
        train_coop=np.stack([r[1] for r in results]),
        train_f=np.stack([r[2] for r in results]),
        active=np.stack([r[3] for r in results]),
    )


def _preset_name(algo: str, sigma: float, rep: bool, intr: bool, frac: float) -> str:
    parts = [algo]
    if sigma > 0:
        parts.append("uncertainty")
    mech = "-".join(name for name, on in (("reputation", rep), ("intrinsic", intr)) if on)
    if mech:
        parts.append(mech)
    elif sigma == 0:
        parts.append("baseline")
    if frac > 0:
        parts.append(f"steer{int(round(frac * 100))}")
    return "-".join(parts)


def _build_presets() -> dict[str, ExperimentConfig]:
    out: dict[str, ExperimentConfig] = {}
    for algo in ("tabular", "dqn"):
        sigmas = (0.0,) if algo == "tabular" else (0.0, 2.0)
        for sigma in sigmas:
            for rep in (False, True):
                for intr in (False, True):
                    fracs = (0.0, 0.3, 0.5, 0.7, 0.9) if rep else (0.0,)
                    for frac in fracs:
                        epochs = 40000 if (algo == "tabular" and rep and intr) else 10000
                        # Uncertainty conditions without the reputation
                        # mechanism probe with the same noisy observations
                        # they train under: their metric is realized
                        # cooperation under uncertainty.  Reputation and
                        # steering conditions probe with exact factors: their
                        # metric is the deterministic norm response.
                        noisy_eval = sigma > 0 and not rep
                        out[_preset_name(algo, sigma, rep, intr, frac)] = ExperimentConfig(
                            algo=algo,
                            sigma=sigma,
                            reputation_enabled=rep,
                            intrinsic_enabled=intr,
                            steering_fraction=frac,
                            epochs=epochs,
                            eval_noise=noisy_eval,
                        )
    return out


PRESETS: dict[str, ExperimentConfig] = _build_presets()


def preset_config(name: str) -> ExperimentConfig:
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise InvalidConfigError(f"unknown preset {name!r}; known presets: {known}") from None
