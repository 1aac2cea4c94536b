"""Pull hyperplane blocking sets of PG(2,4) back to PG(5,2).

For each input the union of spread lines is shrunk to a minimal blocker of
3-spaces whose image is the input again.

    python3 demos/decompose.py
"""

from __future__ import annotations

from blockingsets.construct import decompose, planar_base
from blockingsets.gf import field_of_order, make_extension
from blockingsets.pg import PointSet, Subspace, points_of
from blockingsets.spread import SpreadContext, b_map

ctx = SpreadContext(3, make_extension(field_of_order(2), 2))
big = ctx.big
inputs = {
    "line": PointSet.of(big, points_of(Subspace(big, ((1, 0, 0), (0, 1, 0))))),
    "hermitian curve": PointSet.from_array(big, planar_base("hermitian", field_of_order(4)).array()),
    "baer subplane": PointSet.from_array(big, planar_base("baer", field_of_order(4)).array()),
}
for name, B in inputs.items():
    dec = decompose(B, ctx)
    assert b_map(dec.reduced, ctx) == B
    print(f"{name:16s} |B|={len(B):2d}  cover={len(dec.cover):2d}  reduced={len(dec.reduced):2d}")
