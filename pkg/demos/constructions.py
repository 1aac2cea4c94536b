"""The cone-based constructions, one after another.

Builds a cone over a projective triangle, the MPS set of PG(2,9), the
Baer-subplane construction in PG(2,16) and the t=4 construction in PG(2,256),
verifying each by exhaustive scan.

    python3 demos/constructions.py [seed]
"""

from __future__ import annotations

import sys
import time

import numpy as np

from blockingsets.blocking import classify, is_minimal
from blockingsets.construct import (
    cone,
    construction_1,
    construction_2,
    construction_mps,
    planar_base,
    random_cone_spec,
    search_construction_1_frame,
    search_construction_2_frame,
    search_mps_frame,
)
from blockingsets.errors import TangentConditionFailed
from blockingsets.gf import field_of_order, make_extension
from blockingsets.pg import PG
from blockingsets.spread import SpreadContext

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
rng = np.random.default_rng(seed)


def ctx_of(n, t, q):
    return SpreadContext(n, make_extension(field_of_order(q), t))


def show(title, info):
    print(f"\n== {title}")
    for k, v in info.items():
        print(f"   {k}: {v}")


F3, F4 = field_of_order(3), field_of_order(4)

tri = planar_base("triangle", F3)
K = cone(random_cone_spec(PG(3, F3), 0, tri, rng))
show("cone over the triangle of PG(2,3)", {"size": len(K), "minimal w.r.t. lines": bool(is_minimal(K, 1))})

ctx = ctx_of(3, 2, 3)
for extra in (0, 1):
    spec = search_mps_frame(ctx, tri, np.random.default_rng(7), variant="A", extra_points=extra)
    show(f"MPS in PG(2,9), {extra} extra base point(s)", construction_mps(spec).info)

ctx = ctx_of(3, 2, 4)
omega, gamma = search_construction_1_frame(ctx, 2, rng)
show("Baer base in PG(2,16)", construction_1(ctx, 2, omega, gamma, planar_base("baer", F4)).info)
try:
    construction_1(ctx, 2, omega, gamma, planar_base("hermitian", F4))
except TangentConditionFailed as exc:
    print(f"   Hermitian base refused: {exc}")

t0 = time.perf_counter()
ctx = ctx_of(3, 4, 4)
spec = search_construction_2_frame(ctx, 2, planar_base("hermitian", F4), rng)
res = construction_2(spec)
show(f"Hermitian base, t=4, PG(2,256) ({time.perf_counter() - t0:.1f}s)", res.info)
print("\n" + classify(res.points, 1).text())
