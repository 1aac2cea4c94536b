"""Field reduction at desk scale.

Walks through PG(2,4) seen inside PG(5,2): the line spread, a D1-space in
every hyperplane, a scattered plane and the linear set it produces.

    python3 demos/field_reduction.py
"""

from __future__ import annotations

import numpy as np

from blockingsets.blocking import classify
from blockingsets.gf import field_of_order, make_extension
from blockingsets.pg import PointSet, enumerate_subspaces, meet, points_of
from blockingsets.spread import SpreadContext, b_map, d_subspaces, find_scattered, is_scattered

ctx = SpreadContext(3, make_extension(field_of_order(2), 2))
print(f"big space {ctx.big}, small space {ctx.small}, {ctx.spread_size} spread lines")

fibres = np.bincount(ctx.collapse_array(np.arange(ctx.small.npoints)))
print(f"every small point lies on one spread line: fibre sizes {sorted(set(fibres.tolist()))}")

Ds = [D.subspace for D in d_subspaces(ctx, 2)]
per_hyperplane = [sum(meet(D, H) == D for D in Ds) for H in enumerate_subspaces(ctx.small, 4)]
print(f"{len(per_hyperplane)} hyperplanes, D1-spaces inside each: {sorted(set(per_hyperplane))}")

res = find_scattered(2, ctx, seed=1)
pi = res.subspace
print(f"scattered plane found after {res.restarts} restart(s): {list(pi.basis)}")
assert is_scattered(pi, ctx)

B = b_map(PointSet.of(ctx.small, points_of(pi)), ctx)
print(f"its image has {len(B)} points of {ctx.big}")
print(classify(B, 1).text())

none = find_scattered(3, ctx, budget=5)
print(f"scattered 3-space: found={none.found}, search exhaustive={none.exhaustive}")
