"""Three flavors of "not a Cayley graph".

1. Machine exhaustion: enumerate regular subgroups of Aut; none exist.
2. A counting obstruction: no index-2 quotient matrix matches the spectrum.
3. Number-theoretic feasibility for generalized polygon incidence graphs.
"""

from drgcayley import catalog
from drgcayley.cayleyness import is_cayley
from drgcayley.drg import (gh_cayley_feasible, gq_cayley_feasible,
                           halving_obstruction, parse_array)

for name in ("petersen", "coxeter", "dodecahedron"):
    g = catalog.build(name)
    v = is_cayley(g)
    print(f"{g.name:14s} n={g.n:3d}  ->  {v}")

print()
arr = parse_array("{3,2,2,2,1,1,1;1,1,1,1,1,1,3}")   # Biggs-Smith
ob = halving_obstruction(arr)
print(f"Biggs-Smith halving obstruction: {ob.detail}")

print()
for s in (2, 3, 4):
    print(f"GQ({s},{s}) incidence graph as a Cayley graph: {gq_cayley_feasible(s)}")
for s in (2, 3, 4, 6):
    print(f"GH({s},{s}) incidence graph as a Cayley graph: {gh_cayley_feasible(s)}")
