"""Learning agents: tabular Q-learning, a small neural Q-network, and fixed
norm-following steering agents.

All learners share one surface: ``act(obs, mode, rng)`` produces an action,
``record(transition)`` buffers one round, ``finish_interaction(rng)`` applies
the buffered updates and clears the buffer.  Observations carry the (possibly
noisy) payoff factor and, when the reputation mechanism is enabled for
learners, the opponent's reputation bit.

Stream discipline: in explore mode ``act`` always consumes one uniform and one
integer draw, even when the greedy branch wins, so block pre-draws from the
same generator reproduce scalar call sequences exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping, NamedTuple, Union

import numpy as np

from .game import COOPERATE, DEFECT

Mode = Literal["greedy", "explore"]


class Observation(NamedTuple):
    """What an agent sees before acting.  ``opponent_rep`` is None whenever
    the reputation mechanism is disabled for learner observations."""

    f_obs: float
    opponent_rep: int | None = None


class Transition(NamedTuple):
    """One buffered round.  The update rules bootstrap from ``next_obs``
    only when ``terminal`` is false; the simulation marks every round
    terminal because each round is a one-shot game."""

    obs: Observation
    action: int
    reward: float
    next_obs: Observation
    terminal: bool


class MissingStateError(LookupError):
    """Tabular lookup with an observation outside the initialized state set."""


@dataclass(frozen=True)
class ExplorationSchedule:
    """Epsilon as a function of the training epoch.

    ``constant`` ignores the epoch.  ``linear`` interpolates from eps_start at
    epoch 0 to eps_end at epoch horizon-1 and stays there."""

    kind: Literal["constant", "linear"]
    eps_start: float
    eps_end: float
    horizon: int = 1

    def __post_init__(self) -> None:
        if not 0.0 <= self.eps_end <= self.eps_start <= 1.0:
            raise ValueError(
                f"need 0 <= eps_end <= eps_start <= 1, got "
                f"({self.eps_start}, {self.eps_end})"
            )
        if self.horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {self.horizon}")

    def value(self, epoch: int) -> float:
        if self.kind == "constant":
            return self.eps_start
        if self.horizon == 1:
            return self.eps_end
        frac = min(max(epoch, 0), self.horizon - 1) / (self.horizon - 1)
        if frac >= 1.0:  # exact floor at the last epoch, no interpolation dust
            return self.eps_end
        return self.eps_start + (self.eps_end - self.eps_start) * frac


StateKey = Union[float, tuple[float, int]]


def state_key(obs: Observation) -> StateKey:
    return obs.f_obs if obs.opponent_rep is None else (obs.f_obs, obs.opponent_rep)


class QTable:
    """Action-value table over a fixed, explicitly initialized state set.

    Values start at 0 by default.  With ``init_scale`` > 0 and an ``rng``,
    each value starts at an independent uniform draw from [0, init_scale):
    small enough to be swamped by the first real update, but enough to break
    the all-zero tie so a fresh population starts with mixed greedy actions
    instead of a single bloc.  ``favored`` optionally names one action per
    state whose starting value is lifted by ``favored_value`` on top of the
    jitter.  A lift on the scale of the payoffs acts as a prior: it makes the
    favored action the initial greedy choice and keeps it greedy until the
    other head accumulates evidence of genuinely higher value, rather than
    flipping on its first stray sample.  Reading an unknown state raises
    :class:`MissingStateError`; the tabular learner has no way to generalize,
    so feeding it a continuous observation is a configuration bug upstream.
    """

    def __init__(
        self,
        states: Iterable[StateKey],
        rng: np.random.Generator | None = None,
        init_scale: float = 0.0,
        favored: Mapping[StateKey, int] | None = None,
        favored_value: float = 0.0,
    ):
        if init_scale < 0:
            raise ValueError(f"init_scale must be nonnegative, got {init_scale}")
        if favored_value < 0:
            raise ValueError(f"favored_value must be nonnegative, got {favored_value}")
        if init_scale > 0 and rng is None:
            raise ValueError("init_scale > 0 requires an rng")

        def fresh(state: StateKey) -> np.ndarray:
            base = np.zeros(2, dtype=np.float64)
            if init_scale > 0:
                base += rng.uniform(0.0, init_scale, size=2)
            if favored is not None and state in favored:
                base[favored[state]] += favored_value
            return base

        self._q: dict[StateKey, np.ndarray] = {s: fresh(s) for s in states}
        if not self._q:
            raise ValueError("state set must be nonempty")

    def values(self, key: StateKey) -> np.ndarray:
        try:
            return self._q[key]
        except KeyError:
            raise MissingStateError(f"state {key!r} not in table") from None

    def states(self) -> list[StateKey]:
        return list(self._q)


def q_update(
    table: QTable,
    buffer: list[Transition],
    alpha: float,
    gamma: float,
) -> QTable:
    """One-step Q-learning over the buffer, applied in buffer order.  The
    bootstrap term is dropped on terminal transitions.  The buffer is
    discarded afterwards; an empty buffer is a no-op."""
    for tr in buffer:
        q = table.values(state_key(tr.obs))
        target = tr.reward
        if not tr.terminal:
            target += gamma * float(np.max(table.values(state_key(tr.next_obs))))
        q[tr.action] += alpha * (target - q[tr.action])
    buffer.clear()
    return table


_PARAM_NAMES = ("w1", "b1", "w2", "b2")

# Adam moment decay rates and denominator guard (the conventional values).
ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPS = 1e-8


class Mlp:
    """Fully-connected value net: d_in -> hidden ReLU -> 2 linear outputs.

    Weights are float64, initialized U[-0.5, 0.5) in parameter order W1 (row
    major), b1, W2 (row major), b2.  Inputs are raw (no normalization).

    The net also carries Adam moment estimates for :func:`dqn_update`.  They
    are optimizer state, not parameters: excluded from ``params_flat`` and the
    text snapshots, and reset whenever the weights are replaced wholesale.
    """

    def __init__(self, d_in: int, rng: np.random.Generator, hidden: int = 4):
        if d_in not in (1, 2):
            raise ValueError(f"d_in must be 1 or 2, got {d_in}")
        self.d_in = d_in
        self.hidden = hidden
        self.w1 = rng.uniform(-0.5, 0.5, size=(hidden, d_in))
        self.b1 = rng.uniform(-0.5, 0.5, size=hidden)
        self.w2 = rng.uniform(-0.5, 0.5, size=(2, hidden))
        self.b2 = rng.uniform(-0.5, 0.5, size=2)
        self.reset_optimizer()

    def reset_optimizer(self) -> None:
        """Zero the Adam moment estimates and step count.  The moments
        describe the gradient history of the weights they were accumulated
        on, so replacing the weights invalidates them."""
        self.adam_m = {k: np.zeros_like(getattr(self, k)) for k in _PARAM_NAMES}
        self.adam_v = {k: np.zeros_like(getattr(self, k)) for k in _PARAM_NAMES}
        self.adam_t = 0

    def forward(self, x: np.ndarray) -> np.ndarray:
        """Batched forward pass: (B, d_in) -> (B, 2).

        Accumulation order is fixed per row (no BLAS dispatch), so the result
        for a given row is bit-identical whatever the batch size.  The engine
        relies on that to batch forwards without changing greedy decisions.
        """
        x = np.asarray(x, dtype=np.float64)
        if x.ndim != 2 or x.shape[1] != self.d_in:
            raise ValueError(f"expected (B, {self.d_in}) input, got {x.shape}")
        acc = x[:, 0, None] * self.w1[None, :, 0]
        for j in range(1, self.d_in):
            acc = acc + x[:, j, None] * self.w1[None, :, j]
        h = np.maximum(0.0, acc + self.b1)
        out = h[:, 0, None] * self.w2[None, :, 0]
        for j in range(1, self.hidden):
            out = out + h[:, j, None] * self.w2[None, :, j]
        return out + self.b2

    # --- parameter access (snapshots, gradient checks) ---

    def params_flat(self) -> np.ndarray:
        """All parameters as one vector, in init order (layer-major,
        row-major): W1, b1, W2, b2."""
        return np.concatenate(
            [self.w1.ravel(), self.b1, self.w2.ravel(), self.b2]
        )

    def set_params_flat(self, flat: np.ndarray) -> None:
        flat = np.asarray(flat, dtype=np.float64)
        sizes = [self.w1.size, self.b1.size, self.w2.size, self.b2.size]
        if flat.shape != (sum(sizes),):
            raise ValueError(f"expected {sum(sizes)} parameters, got {flat.shape}")
        i = 0
        self.w1 = flat[i : i + sizes[0]].reshape(self.w1.shape).copy(); i += sizes[0]
        self.b1 = flat[i : i + sizes[1]].copy(); i += sizes[1]
        self.w2 = flat[i : i + sizes[2]].reshape(self.w2.shape).copy(); i += sizes[2]
        self.b2 = flat[i:].copy()
        self.reset_optimizer()

    def save_text(self, path: str) -> None:
        """Plain-text snapshot, one parameter per line, init order."""
        with open(path, "w", newline="\n") as fh:
            for v in self.params_flat():
                fh.write(f"{float(v)!r}\n")

    def load_text(self, path: str) -> None:
        with open(path) as fh:
            self.set_params_flat(np.array([float(line) for line in fh]))


def encode_obs(obs: Observation, d_in: int) -> np.ndarray:
    """Network input vector for one observation: [f_obs] or [f_obs, rep]."""
    if obs.opponent_rep is None:
        if d_in != 1:
            raise ValueError("observation lacks reputation but net expects it")
        return np.array([obs.f_obs], dtype=np.float64)
    if d_in != 2:
        raise ValueError("observation carries reputation but net ignores it")
    return np.array([obs.f_obs, obs.opponent_rep], dtype=np.float64)


def mlp_forward(net: Mlp, obs: Observation) -> tuple[float, float]:
    """Action values (q_defect, q_cooperate) for one observation."""
    q = net.forward(encode_obs(obs, net.d_in)[None, :])[0]
    return float(q[0]), float(q[1])


def batch_loss_grads(
    net: Mlp,
    x: np.ndarray,
    actions: np.ndarray,
    targets: np.ndarray,
) -> tuple[float, dict[str, np.ndarray]]:
    """Loss mean (target - Q(s, a))^2 over a batch and its gradients.

    Targets are treated as constants; gradients flow only through Q(s, a)
    (semi-gradient).  Returns the loss and one gradient array per parameter,
    keyed by parameter name.
    """
    batch = x.shape[0]
    h_pre = x @ net.w1.T + net.b1
    h = np.maximum(0.0, h_pre)
    q = h @ net.w2.T + net.b2
    q_a = q[np.arange(batch), actions]
    err = q_a - targets
    # dL/dq_a for L = mean (target - q_a)^2
    dq_a = 2.0 * err / batch
    dq = np.zeros_like(q)
    dq[np.arange(batch), actions] = dq_a
    dh = dq @ net.w2
    dh_pre = dh * (h_pre > 0.0)
    grads = {
        "w1": dh_pre.T @ x,
        "b1": dh_pre.sum(axis=0),
        "w2": dq.T @ h,
        "b2": dq.sum(axis=0),
    }
    return float(np.mean(err * err)), grads


def adam_step(net: Mlp, grads: Mapping[str, np.ndarray], alpha: float) -> None:
    """One bias-corrected Adam update of the net's weights in place."""
    net.adam_t += 1
    t = net.adam_t
    for k in _PARAM_NAMES:
        g = grads[k]
        m = net.adam_m[k]
        v = net.adam_v[k]
        m[...] = ADAM_BETA1 * m + (1.0 - ADAM_BETA1) * g
        v[...] = ADAM_BETA2 * v + (1.0 - ADAM_BETA2) * g * g
        m_hat = m / (1.0 - ADAM_BETA1**t)
        v_hat = v / (1.0 - ADAM_BETA2**t)
        getattr(net, k)[...] -= alpha * m_hat / (np.sqrt(v_hat) + ADAM_EPS)


def dqn_pass(
    net: Mlp,
    x: np.ndarray,
    actions: np.ndarray,
    rewards: np.ndarray,
    x_next: np.ndarray,
    live: np.ndarray,
    alpha: float,
    gamma: float,
    rng: np.random.Generator,
    batch_size: int | None = None,
) -> None:
    """One pass of Adam steps over an interaction's transitions, in array
    form.  By default the whole buffer is one batch, so the pass is a single
    step; a smaller ``batch_size`` gives a shuffled minibatch pass (final
    partial batch included).

    Bootstrap targets r + gamma * max_a' Q(s', a') * (1 - terminal) are
    computed from the current net and held fixed within each step; no
    separate target network.  The shuffle is drawn in both regimes, so they
    consume identical stream state; with the full buffer in one step it only
    fixes the batch's summation order.
    """
    m = x.shape[0]
    if batch_size is None:
        batch_size = m
    order = rng.permutation(m)
    for start in range(0, m, batch_size):
        idx = order[start : start + batch_size]
        q_next = net.forward(x_next[idx])
        targets = rewards[idx] + gamma * np.max(q_next, axis=1) * live[idx]
        _, grads = batch_loss_grads(net, x[idx], actions[idx], targets)
        adam_step(net, grads, alpha)


def dqn_update(
    net: Mlp,
    buffer: list[Transition],
    alpha: float,
    gamma: float,
    rng: np.random.Generator,
    batch_size: int | None = None,
) -> Mlp:
    """Value-net update over one finished interaction: a single full-buffer
    Adam step by default (see :func:`dqn_pass` for the batch semantics).
    The buffer is cleared afterwards; an empty buffer is a no-op."""
    m = len(buffer)
    if m == 0:
        return net
    x = np.stack([encode_obs(tr.obs, net.d_in) for tr in buffer])
    x_next = np.stack([encode_obs(tr.next_obs, net.d_in) for tr in buffer])
    actions = np.array([tr.action for tr in buffer], dtype=np.intp)
    rewards = np.array([tr.reward for tr in buffer], dtype=np.float64)
    live = np.array([not tr.terminal for tr in buffer], dtype=np.float64)
    dqn_pass(net, x, actions, rewards, x_next, live, alpha, gamma, rng, batch_size)
    buffer.clear()
    return net


def _greedy_from_q(q_defect: float, q_cooperate: float) -> int:
    # Ties break toward defection (keeping one's contribution is the safe
    # choice when the values give no reason to prefer either action).  Live
    # value tables never tie in practice: tabular entries start with strictly
    # positive jitter and network outputs are continuous.
    return COOPERATE if q_cooperate > q_defect else DEFECT


@dataclass
class _LearnerBase:
    agent_id: int
    endowment: float
    schedule: ExplorationSchedule
    alpha: float
    gamma: float
    reputation: int = 1
    epoch: int = 0
    buffer: list[Transition] = field(default_factory=list)

    def epsilon(self) -> float:
        return self.schedule.value(self.epoch)

    def record(self, transition: Transition) -> None:
        self.buffer.append(transition)

    def _explore_or(self, greedy: int, rng: np.random.Generator) -> int:
        # consumes one uniform and one integer draw unconditionally
        u = rng.random()
        candidate = int(rng.integers(0, 2))
        return candidate if u < self.epsilon() else greedy


@dataclass
class TabularLearner(_LearnerBase):
    kind = "tabular"
    table: QTable = None  # type: ignore[assignment]

    def act(self, obs: Observation, mode: Mode, rng: np.random.Generator | None = None) -> int:
        q = self.table.values(state_key(obs))
        greedy = _greedy_from_q(q[0], q[1])
        if mode == "greedy":
            return greedy
        return self._explore_or(greedy, rng)

    def finish_interaction(self, rng: np.random.Generator | None = None) -> None:
        q_update(self.table, self.buffer, self.alpha, self.gamma)


@dataclass
class DqnLearner(_LearnerBase):
    kind = "neural"
    net: Mlp = None  # type: ignore[assignment]

    def act(self, obs: Observation, mode: Mode, rng: np.random.Generator | None = None) -> int:
        q_d, q_c = mlp_forward(self.net, obs)
        greedy = _greedy_from_q(q_d, q_c)
        if mode == "greedy":
            return greedy
        return self._explore_or(greedy, rng)

    def finish_interaction(self, rng: np.random.Generator) -> None:
        dqn_update(self.net, self.buffer, self.alpha, self.gamma, rng)


@dataclass
class SteeringAgent:
    """Non-learning norm follower; see :func:`epgg.norms.steering_action`."""

    agent_id: int
    endowment: float
    reputation: int = 1
    epoch: int = 0
    kind = "steering"

    def act(self, obs: Observation, mode: Mode = "greedy", rng: np.random.Generator | None = None) -> int:
        from .norms import steering_action

        if obs.opponent_rep is None:
            raise ValueError("steering agents require the opponent reputation")
        return steering_action(obs.f_obs, obs.opponent_rep)

    def record(self, transition: Transition) -> None:
        pass

    def finish_interaction(self, rng: np.random.Generator | None = None) -> None:
        pass


Agent = Union[TabularLearner, DqnLearner, SteeringAgent]


def act(agent: Agent, obs: Observation, mode: Mode, rng: np.random.Generator | None = None) -> int:
    """Functional form of the shared acting surface."""
    return agent.act(obs, mode, rng)
