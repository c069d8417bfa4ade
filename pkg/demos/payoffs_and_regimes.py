"""
Payoffs and strategic regimes of the two-player public goods game
=================================================================

Every experiment in this package rests on one payoff rule: each player
either keeps an endowment or contributes it to a pot that is multiplied
by a factor f and split evenly.  Sweeping f moves the game through four
strategic regimes.  This script prints the payoff tables and the
equilibrium structure at the four factors the experiments use.
"""

from epgg.game import COOPERATE, DEFECT, GameSpec, analyze, payoff_matrix

LABEL = {DEFECT: "D", COOPERATE: "C"}

for f in (0.5, 1.0, 1.5, 3.5):
    spec = GameSpec(n=2, endowments=(4.0, 4.0), f=f)
    analysis = analyze(spec)
    print(f"f = {f}  ({analysis.regime.value} regime)")

    # payoff_matrix is indexed [a_row, a_col, player]
    matrix = payoff_matrix(spec)
    for a_row in (DEFECT, COOPERATE):
        cells = []
        for a_col in (DEFECT, COOPERATE):
            u = matrix[a_row, a_col]
            cells.append(f"{LABEL[a_row]}{LABEL[a_col]}: ({u[0]:4.1f}, {u[1]:4.1f})")
        print("   " + "   ".join(cells))

    def names(profiles):
        return sorted("".join(LABEL[a] for a in p) for p in profiles) or ["none"]

    print(f"   dominant: {', '.join(names(analysis.dominant))}")
    print(f"   nash:     {', '.join(names(analysis.nash))}")
    print(f"   pareto:   {', '.join(names(analysis.pareto_optimal))}")
    print()

# The crossing point: above f = 2 (the group size) cooperation becomes the
# dominant strategy, below f = 1 defection is dominant AND efficient, and
# the band in between is the social dilemma the learning experiments probe.
