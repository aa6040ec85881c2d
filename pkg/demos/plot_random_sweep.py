"""
A seeded sweep over random graphs
=================================

Every bound is checked against the Jacobi spectrum of each graph.  The
sweep is reproducible from its seed alone.
"""

from collections import Counter

from spectralbounds import RandomCorpus, sweep

###############################################################################
# Sixty graphs with 8 to 20 vertices at three densities

corpus = RandomCorpus(n_min=8, n_max=20, p_values=(0.2, 0.5, 0.8), count=60, seed=11)
result = sweep(corpus)
print(result.summary["passed"], "of", result.summary["count"], "graphs passed")

###############################################################################
# Which upper bound is tightest, per radius?

wins = Counter()
for res in result.results:
    for rep in res.reports:
        wins[rep.radius_name, rep.tightest()["upper"]] += 1
for (radius, name), k in sorted(wins.items()):
    print(f"{radius:>8} {name:>16} {k:4d}")
