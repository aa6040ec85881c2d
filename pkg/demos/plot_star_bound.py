"""
The pairwise degree bound on stars
==================================

For the star S_n the signless Laplacian radius is n.  The pairwise bound
uses s_i, the sum of neighbour degrees; every vertex of a star has
s_i = n - 1, and the bound comes out exactly n.  So the star attains the
bound even though it is not regular.  Plugging 2n - 3 for the leaves
instead gives 2n - 2, a strict but incorrect gap.
"""

import numpy as np

from spectralbounds import counterexample_star

###############################################################################
# Tabulate both versions

print(f"{'n':>3} {'q1':>10} {'s = nbr deg':>12} {'s = 2n-3':>10}")
for n in range(3, 13):
    rec = counterexample_star(n)
    print(f"{n:>3} {rec.q1:10.6f} {rec.prop27_bound:12.6f} {rec.printed_bound:10.4f}")

###############################################################################
# Neighbour-degree sums straight from the adjacency matrix

n = 6
a = np.zeros((n, n))
a[0, 1:] = a[1:, 0] = 1
d = a.sum(axis=1)
print("degrees", d, "s", a @ d)
