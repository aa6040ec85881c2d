"""
Closed forms for the distance signless Laplacian
================================================

Complete graphs, cycles and balanced complete bipartite graphs are
transmission regular, so their largest eigenvalue is twice the common
transmission.  Here the Jacobi oracle confirms it.
"""

from spectralbounds import FamilySpec, GraphAnalysis, closed_form_dsl, generate_family

###############################################################################
# A handful of members from each family

specs = [FamilySpec("complete", n) for n in (3, 6, 10)]
specs += [FamilySpec("cycle", n) for n in (5, 8, 11)]
specs += [FamilySpec("complete-bipartite", n, n // 2) for n in (4, 8, 12)]

print(f"{'graph':>8} {'Jacobi':>12} {'closed form':>12}")
for spec in specs:
    ctx = GraphAnalysis(generate_family(spec))
    print(f"{spec.label:>8} {ctx.delta1Q:12.6f} {closed_form_dsl(spec):12d}")

###############################################################################
# The whole spectrum of C_6: the top eigenvalue is 2 * 9 = 18, and the
# trace equals the sum of transmissions.

ctx = GraphAnalysis(generate_family(FamilySpec("cycle", 6)))
print(ctx.spec_dsl.eigenvalues.round(6))
print("trace", ctx.spec_dsl.eigenvalues.sum().round(6), "transmissions", ctx.dd.transmissions.sum())
