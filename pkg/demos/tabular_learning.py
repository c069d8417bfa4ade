"""
Tabular learners: rational play, reputations, and self-image
============================================================

A pool of Q-table learners is paired at random each epoch and plays one
public goods round at a random factor.  Three mechanisms are compared at
the social-dilemma factor f = 1.5:

* plain payoff maximization, which converges to defection,
* a reputation mechanism (defecting on a good-standing partner marks you
  bad, and agents can condition on standing), which sustains cooperation,
* an intrinsic self-image bonus (agents imagine their payoff had they
  played their own greedy recommendation), which destabilizes defection
  without fully replacing it.

Desk-scale runs, a few seconds each.
"""

from epgg.sim import ExperimentConfig, run_experiment
from epgg.stats import summarize

RUNS, EPOCHS = 3, 2000

for label, kwargs in [
    ("baseline", {}),
    ("reputation", {"reputation_enabled": True}),
    ("intrinsic", {"intrinsic_enabled": True}),
]:
    config = ExperimentConfig(algo="tabular", runs=RUNS, epochs=EPOCHS, **kwargs)
    series = run_experiment(config)
    row = "  ".join(
        f"f={f:g}: {summarize(series, f).mean:.2f}" for f in config.eval_f
    )
    print(f"{label:<11} {row}")

print()
print("Baseline cooperation tracks the dominant strategy (only f=3.5).")
print("Reputation extends it to the whole f >= 1 range; the self-image")
print("bonus leaves f=1.5 hovering between the two equilibria.")
