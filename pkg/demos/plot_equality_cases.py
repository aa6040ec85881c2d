"""
When the bounds are attained
============================

The regular cycle C_7 attains every upper bound; the path P_7 attains
none.  The gap column shows how far each bound sits from the radius.
"""

from spectralbounds import FamilySpec, dsl_bounds, generate_family

###############################################################################
# C_7 versus P_7

for spec in (FamilySpec("cycle", 7), FamilySpec("path", 7)):
    rep = dsl_bounds(generate_family(spec))
    print(f"\n{spec.label}: delta_1^Q = {rep.radius:.6f}")
    for b in rep.bounds:
        print(f"  {b.name:<16} {b.side:<6} {b.value:12.6f} gap {b.gap(rep.radius):10.2e}"
              f"  predicted {b.equality_predicted!s:<5} observed {b.equality_observed}")

###############################################################################
# The indexed bound reports every index; for the path the best index is
# not the first.

rep = dsl_bounds(generate_family(FamilySpec("path", 7)))
for d in rep["T3.7-upper"].index_detail:
    print(d["i"], round(d["value"], 6))
