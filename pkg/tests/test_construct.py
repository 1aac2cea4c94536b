from __future__ import annotations

import dataclasses

import numpy as np
import pytest

from blockingsets.blocking import is_blocking, is_minimal, spectrum, tangent_counts
from blockingsets.construct import (
    ConeSpec,
    Construction2Spec,
    base_size,
    cone,
    cone_size,
    construction_1,
    construction_2,
    construction_2_closed_form,
    construction_mps,
    decompose,
    linear_bs,
    planar_base,
    random_cone_spec,
    search_construction_1_frame,
    search_construction_2_frame,
    search_mps_frame,
)
from blockingsets.errors import (
    BadFrame,
    BaseLineConditionFailed,
    DimensionMismatch,
    FieldShapeMismatch,
    NotMinimalInput,
    TangentConditionFailed,
    TExponentTooSmall,
)
from blockingsets.gf import field_of_order, make_extension
from blockingsets.pg import PG, PointSet, Subspace, from_local, points_of, random_subspace, span
from blockingsets.spread import SpreadContext, b_map, field_reduce, find_scattered


def ctx_of(n, t, q):
    return SpreadContext(n, make_extension(field_of_order(q), t))


@pytest.mark.parametrize("kind,q", [("line", 3), ("line", 4), ("baer", 4), ("baer", 9), ("hermitian", 4), ("hermitian", 9), ("triangle", 3), ("triangle", 5), ("triangle", 7)])
def test_planar_bases(kind, q):
    B = planar_base(kind, field_of_order(q))
    assert len(B) == base_size(kind, q)
    assert is_blocking(B, 1) and is_minimal(B, 1)


def test_planar_base_tangents():
    F4 = field_of_order(4)
    assert set(tangent_counts(planar_base("hermitian", F4), 1).values()) == {1}
    assert set(tangent_counts(planar_base("baer", F4), 1).values()) == {2}


def test_planar_base_shape_errors():
    with pytest.raises(FieldShapeMismatch):
        planar_base("baer", field_of_order(8))
    with pytest.raises(FieldShapeMismatch):
        planar_base("hermitian", field_of_order(3))
    with pytest.raises(FieldShapeMismatch):
        planar_base("triangle", field_of_order(4))


def test_cone_size_examples():
    assert cone_size(0, 6, 3) == 19
    S = PG(3, field_of_order(2))
    vertex = Subspace(S, ((1, 0, 0, 0), (0, 1, 0, 0)))
    screen = Subspace(S, ((0, 0, 1, 0), (0, 0, 0, 1)))
    K = cone(ConeSpec(vertex, screen, PointSet.of(S, points_of(screen))))
    assert len(K) == 15


@pytest.mark.parametrize("q", [2, 3, 4])
def test_random_cones_size_formula(q):
    rng = np.random.default_rng(q)
    F = field_of_order(q)
    S = PG(4, F)
    base = planar_base("line", F)
    for s in (-1, 0, 1):
        spec = random_cone_spec(S, s, base, rng)
        assert len(cone(spec)) == cone_size(s, len(base), q)


def test_cone_bad_frame():
    S = PG(3, field_of_order(2))
    vertex = Subspace(S, ((1, 0, 0, 0),))
    screen = Subspace(S, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)))
    with pytest.raises(BadFrame):
        cone(ConeSpec(vertex, screen, PointSet.of(S, [])))


def test_cone_minimality_equivalence_triangle():
    F = field_of_order(3)
    S = PG(3, F)
    rng = np.random.default_rng(1)
    tri = planar_base("triangle", F)
    spec = random_cone_spec(S, 0, tri, rng)
    K = cone(spec)
    assert len(K) == 19 and is_minimal(K, 1)
    extra = next(P for P in points_of(spec.screen) if P not in spec.base)
    spec2 = dataclasses.replace(spec, base=spec.base.with_point(extra))
    K2 = cone(spec2)
    assert is_blocking(K2, 1) and not is_minimal(K2, 1)


def test_linear_bs_scattered_and_d_subspace():
    ctx = ctx_of(3, 2, 4)
    pi = find_scattered(2, ctx, seed=0).subspace
    B = linear_bs(pi, ctx, 2)
    assert len(B) == 21 and is_minimal(B, 1)
    assert set(spectrum(B, 1)) <= {1, 5, 9, 13, 17, 21}
    D = field_reduce(random_subspace(ctx.big, 0, np.random.default_rng(2)), ctx).subspace
    with pytest.raises(DimensionMismatch):
        linear_bs(D, ctx, 2)


def test_linear_bs_through_d_subspace_is_trivial():
    # an (nt-kt)-space through the reduction of an (n-k-1)-space maps onto a full (n-k)-space
    ctx = ctx_of(3, 2, 2)
    rng = np.random.default_rng(0)
    U = random_subspace(ctx.big, 0, rng)
    D = field_reduce(U, ctx).subspace
    P = next(ctx.small.point(i) for i in range(ctx.small.npoints) if ctx.small.point(i) not in D)
    B = linear_bs(span([D, P]), ctx, 2)
    assert len(B) == 5
    assert B == PointSet.of(ctx.big, points_of(span(list(B))))
    assert is_minimal(B, 1)


def test_construction_1_baer_and_hermitian():
    ctx = ctx_of(3, 2, 4)
    rng = np.random.default_rng(0)
    omega, gamma = search_construction_1_frame(ctx, 2, rng)
    res = construction_1(ctx, 2, omega, gamma, planar_base("baer", field_of_order(4)))
    assert res.info["blocking"] and res.info["minimal"]
    assert res.info["cone_size"] == cone_size(0, 7, 4)
    with pytest.raises(TangentConditionFailed):
        construction_1(ctx, 2, omega, gamma, planar_base("hermitian", field_of_order(4)))
    by = construction_1(ctx, 2, omega, gamma, planar_base("hermitian", field_of_order(4)), bypass=True)
    assert by.info["blocking"] and isinstance(by.info["minimal"], bool)


def test_construction_1_line_base_is_linear():
    ctx = ctx_of(3, 2, 4)
    rng = np.random.default_rng(5)
    omega, gamma = search_construction_1_frame(ctx, 2, rng)
    base = planar_base("line", field_of_order(4))
    res = construction_1(ctx, 2, omega, gamma, base)
    amb = from_local(gamma, base)
    sub = span([omega] + list(amb))
    assert sub.dim == 2
    assert res.points == linear_bs(sub, ctx, 2)


def test_construction_1_dimension_errors():
    ctx = ctx_of(3, 2, 4)
    rng = np.random.default_rng(0)
    gamma = random_subspace(ctx.small, 2, rng)
    with pytest.raises(DimensionMismatch):
        construction_1(ctx, 2, random_subspace(ctx.small, 1, rng), gamma, planar_base("baer", field_of_order(4)))


def test_construction_2_t_too_small():
    ctx = ctx_of(3, 3, 2)
    e = ctx.small.empty()
    spec = Construction2Spec(ctx, 2, e, e, e, e, PointSet.of(ctx.small, []))
    with pytest.raises(TExponentTooSmall):
        spec.validate()


def test_construction_2_closed_form_values():
    assert construction_2_closed_form(9, 4, 4) + 1 == 561 == 512 + 64 - 32 + 16 + 1


def test_construction_2_small_instance():
    ctx = ctx_of(3, 4, 2)
    base_local = planar_base("line", field_of_order(2))
    spec = search_construction_2_frame(ctx, 2, base_local, np.random.default_rng(0))
    res = construction_2(spec)
    assert res.info["blocking"] and res.info["minimal"]
    assert res.info["epsilon"] >= 1
    assert res.info["span_dim"] == 2
    assert b_map(PointSet.of(ctx.small, points_of(spec.nu)), ctx) <= res.points


@pytest.fixture(scope="module")
def mps_spec():
    ctx = ctx_of(3, 2, 3)
    return search_mps_frame(ctx, planar_base("triangle", field_of_order(3)), np.random.default_rng(7), variant="A")


def test_mps_minimal(mps_spec):
    res = construction_mps(mps_spec)
    assert res.info["variant"] == "A"
    assert res.info["blocking"] and res.info["minimal"] and res.info["base_minimal"]


def test_mps_non_minimal_base():
    ctx = ctx_of(3, 2, 3)
    spec = search_mps_frame(ctx, planar_base("triangle", field_of_order(3)), np.random.default_rng(7), variant="A", extra_points=1)
    res = construction_mps(spec)
    assert res.info["blocking"] and not res.info["minimal"] and not res.info["base_minimal"]


def test_mps_line_through_t_rejected(mps_spec):
    spec = mps_spec
    T = spec.derived()["T"]
    gpts = points_of(spec.gamma)
    R = next(P for P in points_of(spec.gamma_p) if P not in gpts)
    line = PointSet.of(spec.ctx.small, points_of(span([T, R])))
    with pytest.raises(BaseLineConditionFailed):
        dataclasses.replace(spec, base=line).validate()


def test_decompose_line_and_hermitian():
    ctx = ctx_of(3, 2, 2)
    big = ctx.big
    line = PointSet.of(big, points_of(Subspace(big, ((1, 0, 0), (0, 1, 0)))))
    dec = decompose(line, ctx)
    assert len(dec.cover) == 15 and b_map(dec.reduced, ctx) == line
    H = planar_base("hermitian", field_of_order(4))
    H = PointSet.from_array(big, H.array())
    dec = decompose(H, ctx)
    assert len(dec.cover) == 27
    assert b_map(dec.reduced, ctx) == H and is_minimal(dec.reduced, 3)


def test_decompose_rejects_non_minimal():
    ctx = ctx_of(3, 2, 2)
    with pytest.raises(NotMinimalInput):
        decompose(PointSet.of(ctx.big, range(21)), ctx)


def test_hermitian_cover_parabolic_sections_are_minimal_preimages():
    from blockingsets.pg import enumerate_subspaces
    from blockingsets.spread import spread_cover

    ctx = ctx_of(3, 2, 2)
    H = PointSet.from_array(ctx.big, planar_base("hermitian", field_of_order(4)).array())
    cover = spread_cover(H, ctx)
    sections = [cover & points_of(S) for S in enumerate_subspaces(ctx.small, 4)]
    fifteen = [S for S in sections if len(S) == 15]
    assert len(fifteen) == 36
    assert all(b_map(S, ctx) == H and is_minimal(S, 3) for S in fifteen)
    # the greedy pass lands on a smaller preimage
    assert len(decompose(H, ctx).reduced) == 11
