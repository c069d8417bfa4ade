"""Extended public goods game: a reproducible multi-agent RL simulator.

Measures how reputation-based social norms, norm-following steering agents,
intrinsic self-play rewards, and Gaussian observation uncertainty shape
cooperation among independent Q-learners playing the extended public goods
game over the full payoff-factor range.
"""

from .agents import (
    DqnLearner,
    ExplorationSchedule,
    MissingStateError,
    Mlp,
    Observation,
    QTable,
    SteeringAgent,
    TabularLearner,
    Transition,
    act,
    dqn_update,
    mlp_forward,
    q_update,
)
from .game import (
    COOPERATE,
    DEFECT,
    GameSpec,
    MatrixAnalysis,
    Regime,
    analyze,
    classify,
    payoff_matrix,
    utility,
)
from .norms import (
    BAD,
    GOOD,
    NormParams,
    assign_reputation,
    base_norm,
    epgg_norm,
    steering_action,
)
from .rewards import RewardParams, round_reward
from .sim import (
    EVAL_FACTORS_DEFAULT,
    EpochRecord,
    ExperimentConfig,
    FRange,
    InvalidConfigError,
    MetricSeries,
    PRESETS,
    RunStreams,
    build_pool,
    evaluate,
    preset_config,
    run_epoch,
    run_experiment,
    run_single,
)
from .stats import (
    Summary,
    WelchResult,
    regularized_incomplete_beta,
    run_level_means,
    student_t_two_sided_p,
    summarize,
    welch_t_test,
)
from .uncertainty import NoiseModel, observe, observe_block

__version__ = "0.1.0"
