from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockingsets.errors import (
    AmbientMismatch,
    BadFrame,
    DimensionOutOfRange,
    InstanceTooLarge,
    PointInVertex,
    ZeroVector,
)
from blockingsets.gf import field_of_order
from blockingsets.pg import (
    PG,
    PointSet,
    ProjPoint,
    Subspace,
    enumerate_subspaces,
    gaussian_count,
    meet,
    normalize,
    point_indices,
    points_of,
    project,
    random_subspace,
    span,
    subspace_from_rows,
)

F2, F3, F4 = field_of_order(2), field_of_order(3), field_of_order(4)


def test_normalize_examples():
    S = PG(2, F3)
    assert normalize((0, 2, 1), S).coords == (0, 1, 2)
    assert normalize((1, 0, 0), S).coords == (1, 0, 0)
    with pytest.raises(ZeroVector):
        normalize((0, 0, 0), S)


def test_normalize_all_scalings_pg23():
    S = PG(2, F3)
    for i in range(S.npoints):
        v = S.coords(i)
        for lam in (1, 2):
            assert normalize([F3.mul(lam, x) for x in v], S).index == i


@pytest.mark.parametrize("dim,q", [(1, 2), (2, 3), (3, 4), (2, 9), (5, 2)])
def test_index_coords_round_trip_and_order(dim, q):
    S = PG(dim, field_of_order(q))
    coords = [S.coords(i) for i in range(S.npoints)]
    assert coords == sorted(coords)
    assert all(S.index(c) == i for i, c in enumerate(coords))
    assert np.array_equal(S.vindex(S.vcoords(np.arange(S.npoints))), np.arange(S.npoints))


def test_span_examples():
    S = PG(2, F3)
    assert span([], space=S).rank == 0
    L = span([S.point(0), S.point(5)])
    assert L.rank == 2 and len(points_of(L)) == 4


def test_span_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        span([PG(2, F3).point(0), PG(2, F2).point(0)])


def test_meet_examples():
    S = PG(2, F4)
    L1 = Subspace(S, ((1, 0, 0), (0, 1, 0)))
    L2 = Subspace(S, ((1, 0, 0), (0, 0, 1)))
    assert meet(L1, L2).rank == 1
    assert meet(L1, S.full()) == L1
    assert meet(L1, L1) == L1
    P = PG(5, F2)
    H1 = subspace_from_rows(P, [r for r in np.eye(6, dtype=int).tolist() if r[5] == 0])
    H2 = subspace_from_rows(P, [r for r in np.eye(6, dtype=int).tolist() if r[0] == 0])
    assert meet(H1, H2).rank == 4


@given(st.integers(0, 10**6))
def test_grassmann_identity(seed):
    rng = np.random.default_rng(seed)
    S = PG(5, F2)
    A = random_subspace(S, int(rng.integers(-1, 5)), rng)
    B = random_subspace(S, int(rng.integers(-1, 5)), rng)
    assert span([A, B]).rank == A.rank + B.rank - meet(A, B).rank


@given(st.integers(0, 10**6))
def test_canonical_form_invariant_under_row_operations(seed):
    rng = np.random.default_rng(seed)
    S = PG(4, F3)
    S0 = random_subspace(S, int(rng.integers(0, 4)), rng)
    rows = np.array(S0.basis)
    while True:
        G = rng.integers(0, 3, size=(S0.rank, S0.rank))
        if subspace_from_rows(PG(S0.rank - 1, F3), G.tolist()).rank == S0.rank:
            break
    mixed = S.combine(G, rows)
    assert subspace_from_rows(S, mixed.tolist()) == S0


def test_points_of_counts():
    assert len(points_of(PG(3, F2).empty())) == 0
    L = Subspace(PG(2, F4), ((1, 0, 0), (0, 1, 0)))
    assert len(points_of(L)) == 5
    R = Subspace(PG(5, F2), tuple(tuple(int(i == j) for j in range(6)) for i in range(4)))
    assert len(points_of(R)) == 15


def test_enumeration_examples():
    assert len(list(enumerate_subspaces(PG(2, F2), 1))) == 7
    assert len(list(enumerate_subspaces(PG(5, F2), 3))) == 651
    W = Subspace(PG(5, F2), tuple(tuple(int(i == j) for j in range(6)) for i in range(4)))
    through = list(enumerate_subspaces(PG(5, F2), 4, through=W))
    assert len(through) == 3 and all(meet(H, W) == W for H in through)


@pytest.mark.parametrize("dim,d,q", [(2, 1, 2), (3, 1, 3), (4, 2, 2), (3, 2, 4), (5, 3, 2), (2, 0, 5)])
def test_enumeration_matches_gaussian_and_is_sorted(dim, d, q):
    S = PG(dim, field_of_order(q))
    subs = list(enumerate_subspaces(S, d))
    assert len(subs) == gaussian_count(dim + 1, d + 1, q)
    assert len(set(subs)) == len(subs)
    keys = [tuple(itertools.chain.from_iterable(U.basis)) for U in subs]
    assert keys == sorted(keys)
    assert subs == list(enumerate_subspaces(S, d))


def test_enumeration_through_counts():
    S = PG(4, F3)
    rng = np.random.default_rng(3)
    W = random_subspace(S, 1, rng)
    subs = list(enumerate_subspaces(S, 3, through=W))
    assert len(subs) == gaussian_count(3, 2, 3)
    assert all(meet(U, W) == W for U in subs)


def test_enumeration_errors():
    with pytest.raises(InstanceTooLarge):
        list(enumerate_subspaces(PG(5, F4), 2, cap=100))
    with pytest.raises(DimensionOutOfRange):
        list(enumerate_subspaces(PG(2, F2), 3))


def test_gaussian_examples():
    assert gaussian_count(6, 4, 2) == 651
    assert gaussian_count(5, 5, 7) == 1
    assert gaussian_count(3, 1, 4) == 21


@pytest.mark.parametrize("m,q", [(2, 2), (3, 3), (4, 4), (3, 9), (6, 2), (2, 64)])
def test_duality_count(m, q):
    assert gaussian_count(m, m - 1, q) == gaussian_count(m, 1, q)


def test_project_examples():
    S = PG(2, F3)
    vertex = Subspace(S, ((1, 0, 0),))
    screen = Subspace(S, ((0, 1, 0), (0, 0, 1)))
    assert project(normalize((1, 1, 2), S), vertex, screen).coords == (0, 1, 2)
    P = normalize((0, 1, 1), S)
    assert project(P, vertex, screen) == P
    with pytest.raises(PointInVertex):
        project(vertex.basis and ProjPoint(S, (1, 0, 0)), vertex, screen)
    with pytest.raises(BadFrame):
        project(P, vertex, Subspace(S, ((1, 0, 0), (0, 1, 0))))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_projection_fibres(q):
    F = field_of_order(q)
    S = PG(2, F)
    vertex = Subspace(S, ((1, 0, 0),))
    screen = Subspace(S, ((0, 1, 0), (0, 0, 1)))
    fibres = {}
    for i in range(S.npoints):
        P = S.point(i)
        if P in vertex:
            continue
        fibres.setdefault(project(P, vertex, screen), 0)
        fibres[project(P, vertex, screen)] += 1
    assert len(fibres) == q + 1 and set(fibres.values()) == {q}


def test_pointset_operations():
    S = PG(2, F2)
    A = PointSet.of(S, [S.point(0), S.point(1)])
    B = PointSet.of(S, [1, 2])
    assert len(A | B) == 3 and len(A & B) == 1 and len(A - B) == 1
    assert A.with_point(S.point(2)) == A | B
    assert [P.index for P in A] == [0, 1]
    with pytest.raises(AmbientMismatch):
        A | PointSet.of(PG(2, F3), [0])


def test_subspace_contains():
    S = PG(3, F3)
    U = Subspace(S, ((1, 0, 0, 0), (0, 1, 0, 0)))
    assert S.point(point_indices(U)[2]) in U
    assert normalize((0, 0, 1, 0), S) not in U
