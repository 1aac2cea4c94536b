from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockingsets.errors import AmbientMismatch, NotScattered, PlaneMissesRegulus
from blockingsets.gf import expand_vector, field_of_order, make_extension
from blockingsets.pg import (
    PointSet,
    Subspace,
    enumerate_subspaces,
    meet,
    normalize,
    point_indices,
    points_of,
    random_subspace,
    span,
)
from blockingsets.spread import (
    RegulusMeet,
    SpreadContext,
    as_d_subspace,
    b_map,
    classify_regulus_plane_meet,
    collapse_point,
    d_subspaces,
    expand_point,
    field_reduce,
    find_scattered,
    is_scattered,
    regulus,
    spread_cover,
)


def ctx_of(n, t, q):
    return SpreadContext(n, make_extension(field_of_order(q), t))


C322 = ctx_of(3, 2, 2)
C223 = ctx_of(2, 2, 3)


def test_collapse_expand_round_trip():
    ctx = ctx_of(3, 2, 3)
    rng = np.random.default_rng(0)
    for _ in range(50):
        v = [int(x) for x in rng.integers(0, 9, size=3)]
        if not any(v):
            continue
        w = expand_vector(v, ctx.ext)
        assert collapse_point(normalize(w, ctx.small), ctx) == normalize(v, ctx.big)


def test_partition_pg52():
    fibres = np.bincount(C322.collapse_array(np.arange(63)), minlength=21)
    assert len(fibres) == 21 and set(fibres.tolist()) == {3}
    assert C322.spread_size == 21


@pytest.mark.parametrize("n,t,q", [(3, 2, 2), (2, 2, 3), (2, 3, 2), (2, 4, 2), (2, 2, 4)])
def test_spread_elements_partition_small_space(n, t, q):
    ctx = ctx_of(n, t, q)
    seen = np.zeros(ctx.small.npoints, dtype=int)
    for i in range(ctx.big.npoints):
        R = expand_point(ctx.big.point(i), ctx)
        assert R.dim == t - 1
        idx = point_indices(R)
        seen[idx] += 1
        assert np.all(ctx.collapse_array(idx) == i)
    assert np.all(seen == 1)
    assert ctx.big.npoints == ctx.spread_size


def test_spread_elements_pairwise_disjoint_pg52():
    els = [expand_point(C322.big.point(i), C322) for i in range(21)]
    assert all(len(points_of(R)) == 3 for R in els)
    for A, B in itertools.combinations(els, 2):
        assert meet(A, B).rank == 0


def test_field_reduce_examples():
    B = C322.big
    P = B.point(4)
    assert field_reduce(Subspace(B, (P.coords,)), C322).subspace == expand_point(P, C322)
    L = Subspace(B, ((1, 0, 0), (0, 1, 0)))
    D = field_reduce(L, C322)
    assert D.dim == 3 and D.level == 2
    cover = set()
    for P in points_of(L):
        cover |= set(point_indices(expand_point(P, C322)).tolist())
    assert cover == set(point_indices(D.subspace).tolist()) and len(cover) == 15
    assert field_reduce(B.full(), C322).subspace == C322.small.full()


def test_b_map_examples():
    small = C322.small
    assert len(b_map(PointSet(small, frozenset()), C322)) == 0
    R = expand_point(C322.big.point(7), C322)
    assert b_map(PointSet.of(small, points_of(R)), C322) == PointSet.of(C322.big, [7])
    line = next(L for L in enumerate_subspaces(C223.small, 1) if is_scattered(L, C223))
    assert len(b_map(PointSet.of(C223.small, points_of(line)), C223)) == 4
    with pytest.raises(AmbientMismatch):
        b_map(PointSet.of(C223.big, [0]), C223)


def test_spread_element_not_scattered():
    R = expand_point(C223.big.point(3), C223)
    v = is_scattered(R, C223)
    assert not v and v.witness == R


def test_non_spread_lines_scattered_pg33():
    lines = list(enumerate_subspaces(C223.small, 1))
    spread_lines = {expand_point(C223.big.point(i), C223) for i in range(10)}
    assert len(lines) == 130
    for L in lines:
        assert bool(is_scattered(L, C223)) == (L not in spread_lines)


def test_no_scattered_three_space_pg52():
    assert not any(is_scattered(S, C322) for S in enumerate_subspaces(C322.small, 3))


def test_d_subspaces_and_recognition():
    Ds = list(d_subspaces(C322, 2))
    assert len(Ds) == 21 and all(D.dim == 3 for D in Ds)
    assert all(as_d_subspace(D.subspace, C322) == D for D in Ds)
    threes = list(enumerate_subspaces(C322.small, 3))
    assert sum(as_d_subspace(S, C322) is not None for S in threes) == 21


def test_every_hyperplane_contains_one_d1_space():
    Ds = [D.subspace for D in d_subspaces(C322, 2)]
    for H in enumerate_subspaces(C322.small, 4):
        assert sum(meet(D, H) == D for D in Ds) == 1


@given(st.integers(0, 10**6), st.sampled_from([(3, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 3)]))
def test_b_map_of_d_subspace_is_collapsed_subspace(seed, nqt):
    n, t, q = nqt
    ctx = ctx_of(n, t, q)
    rng = np.random.default_rng(seed)
    U = random_subspace(ctx.big, int(rng.integers(0, n)), rng)
    D = field_reduce(U, ctx)
    assert b_map(PointSet.of(ctx.small, points_of(D.subspace)), ctx) == PointSet.of(ctx.big, points_of(U))
    assert spread_cover(PointSet.of(ctx.big, points_of(U)), ctx) == PointSet.of(ctx.small, points_of(D.subspace))


@given(st.integers(0, 10**6))
def test_scattered_image_size(seed):
    ctx = ctx_of(3, 2, 3)
    rng = np.random.default_rng(seed)
    S = random_subspace(ctx.small, int(rng.integers(0, 3)), rng)
    if is_scattered(S, ctx):
        img = b_map(PointSet.of(ctx.small, points_of(S)), ctx)
        assert len(img) == (3**S.rank - 1) // 2


def test_find_scattered_examples():
    miss = find_scattered(3, C322, budget=20)
    assert not miss.found and miss.exhaustive
    plane = find_scattered(2, C322)
    assert plane.found and is_scattered(plane.subspace, C322)
    line = find_scattered(1, C223, seed=1)
    assert line.found and is_scattered(line.subspace, C223) and line.subspace.dim == 1
    ctx = ctx_of(2, 4, 2)
    res = find_scattered(3, ctx, seed=0)
    assert res.found and res.subspace.dim == 3 and is_scattered(res.subspace, ctx)


def _regulus_cover(ell, ctx):
    out = set()
    for R in regulus(ell, ctx):
        out |= set(point_indices(R).tolist())
    return out


def test_regulus_classification_pg33():
    ell = find_scattered(1, C223, seed=0).subspace
    assert len(regulus(ell, C223)) == 4
    tallies = {}
    for pi in enumerate_subspaces(C223.small, 2):
        kind = classify_regulus_plane_meet(ell, pi, C223)
        tallies[kind] = tallies.get(kind, 0) + 1
    assert set(tallies) <= {RegulusMeet.TWO_LINES, RegulusMeet.CONIC}
    assert sum(tallies.values()) == 40


def test_regulus_two_lines_direct():
    ell = find_scattered(1, C223, seed=2).subspace
    R = regulus(ell, C223)[0]
    P = next(Q for Q in points_of(ell) if Q not in R)
    assert classify_regulus_plane_meet(ell, span([R, P]), C223) is RegulusMeet.TWO_LINES


def test_regulus_errors():
    ctx = ctx_of(3, 2, 3)
    R = expand_point(ctx.big.point(0), ctx)
    pi = span([R, ctx.small.point(point_indices(expand_point(ctx.big.point(1), ctx))[0])])
    with pytest.raises(NotScattered):
        classify_regulus_plane_meet(R, pi, ctx)
    ell = find_scattered(1, ctx, seed=0).subspace
    cover = _regulus_cover(ell, ctx)
    rng = np.random.default_rng(5)
    while True:
        pi = random_subspace(ctx.small, 2, rng)
        if not set(point_indices(pi).tolist()) & cover:
            break
    with pytest.raises(PlaneMissesRegulus):
        classify_regulus_plane_meet(ell, pi, ctx)


def test_hermitian_cover_is_elliptic_quadric_pg52():
    from blockingsets.construct import planar_base
    from blockingsets.spread import spread_cover

    from oracles import gf2_nullspace

    H = PointSet.from_array(C322.big, planar_base("hermitian", field_of_order(4)).array())
    cover = spread_cover(H, C322)
    mons = [(i, j) for i in range(6) for j in range(i, 6)]
    value = lambda form, x: sum(c * x[i] * x[j] for c, (i, j) in zip(form, mons)) % 2
    X = C322.small.vcoords(cover.array()).tolist()
    forms = gf2_nullspace([[x[i] * x[j] % 2 for i, j in mons] for x in X])
    assert len(forms) == 1
    zeros = [i for i, x in enumerate(C322.small.vcoords(np.arange(63)).tolist()) if value(forms[0], x) == 0]
    # 27 = (q^3+1)(q+1) at q=2, the size of the elliptic quadric of PG(5,2)
    assert len(cover) == 27 and zeros == cover.array().tolist()
