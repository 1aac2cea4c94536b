from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockingsets.blocking import (
    catalog,
    classify,
    exponent,
    exponent_of,
    intersection_counts,
    is_blocking,
    is_minimal,
    is_small,
    minimize,
    spectrum,
    tangent_counts,
    tangent_spaces,
    trivial_witness,
)
from blockingsets.construct import planar_base
from blockingsets.errors import InstanceTooLarge, NotBlocking, PointNotInSet
from blockingsets.gf import field_of_order, make_extension
from blockingsets.pg import PG, PointSet, Subspace, enumerate_subspaces, meet, normalize, points_of, random_subspace
from blockingsets.spread import SpreadContext, b_map

from oracles import naive_counts, naive_is_blocking, naive_is_minimal, naive_tangent_count


def plane(q):
    return PG(2, field_of_order(q))


def line_set(S):
    return PointSet.of(S, points_of(Subspace(S, tuple(tuple(int(i == j) for j in range(S.n)) for i in range(S.dim)))))


def conic_pg24():
    S = plane(4)
    F = S.field
    pts = [normalize((1, x, F.mul(x, x)), S) for x in range(4)] + [normalize((0, 0, 1), S)]
    return PointSet.of(S, pts)


@pytest.fixture(scope="module")
def linear_pg216():
    ctx = SpreadContext(3, make_extension(field_of_order(4), 2))
    rng = np.random.default_rng(11)
    pi = random_subspace(ctx.small, 2, rng)
    return b_map(PointSet.of(ctx.small, points_of(pi)), ctx)


def test_line_blocks_lines():
    for q in (2, 3, 4, 5, 9):
        assert is_blocking(line_set(plane(q)), 1)


def test_conic_not_blocking_with_external_line():
    C = conic_pg24()
    v = is_blocking(C, 1)
    assert not v
    assert not any(P in v.witness for P in C)
    ok, first = naive_is_blocking(C, 1)
    assert not ok and first == v.witness


def test_linear_set_blocks_and_is_minimal(linear_pg216):
    B = linear_pg216
    assert is_blocking(B, 1) and is_minimal(B, 1)
    assert set(spectrum(B, 1)) <= {v for v in range(len(B) + 1) if v % 4 == 1}
    assert exponent(B, 1) >= 1


def test_tangent_examples():
    F4 = field_of_order(4)
    H = planar_base("hermitian", F4)
    assert set(tangent_counts(H, 1).values()) == {1}
    baer = planar_base("baer", F4)
    assert set(tangent_counts(baer, 1).values()) == {2}
    full = PointSet.of(plane(3), range(13))
    assert set(tangent_counts(full, 1).values()) == {0}
    P = next(iter(H))
    T = tangent_spaces(H, P, 1)
    assert len(T) == 1 and {Q.index for Q in points_of(T[0])} & set(H.array().tolist()) == {P.index}
    assert naive_tangent_count(H, P, 1) == 1
    with pytest.raises(PointNotInSet):
        tangent_spaces(H, next(Q for Q in (plane(4).point(i) for i in range(21)) if Q not in H), 1)


def test_tangent_limit():
    baer = planar_base("baer", field_of_order(4))
    P = next(iter(baer))
    assert len(tangent_spaces(baer, P, 1, limit=1)) == 1


def test_minimal_examples():
    S = plane(3)
    L = line_set(S)
    assert is_minimal(L, 1)
    extra = next(S.point(i) for i in range(S.npoints) if S.point(i) not in L)
    v = is_minimal(L.with_point(extra), 1)
    assert not v and v.witness == extra
    assert minimize(L.with_point(extra), 1) == L
    assert minimize(L, 1) == L
    with pytest.raises(NotBlocking):
        is_minimal(conic_pg24(), 1)
    with pytest.raises(NotBlocking):
        minimize(conic_pg24(), 1)


def test_exponent_examples():
    for q, e in [(2, 1), (3, 1), (4, 2), (8, 3), (9, 2)]:
        assert exponent(line_set(plane(q)), 1) == e
    assert exponent_of(np.array([1, 2, 3]), 2, 5) == 0
    assert exponent_of(np.array([1, 5, 9]), 2, 5) == 2
    assert exponent_of(np.array([1, 1]), 3, 4) == 4


def test_classify_line_pg29():
    R = classify(line_set(plane(9)), 1)
    assert R.size == 10 and R.blocking and R.minimal and R.trivial and R.redei
    assert R.small and R.exponent == 2
    assert R.spectrum == {1: 90, 10: 1}
    txt = R.text()
    assert "TRIVIAL yes" in txt and "REDEI yes" in txt and "WITNESS trivial" in txt


def test_classify_examples(linear_pg216):
    R = classify(linear_pg216, 1)
    assert R.size == len(linear_pg216) and R.blocking and R.minimal
    if R.size == 21:
        assert R.small
    H = classify(planar_base("hermitian", field_of_order(4)), 1)
    assert H.size == 9 and not H.small and H.minimal and not H.trivial
    C = classify(conic_pg24(), 1)
    assert not C.blocking and not C.minimal and "WITNESS unblocked" in C.text()


def test_redei_only_for_hyperplanes():
    S = PG(3, field_of_order(2))
    B = PointSet.of(S, points_of(Subspace(S, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)))))
    assert classify(B, 1).redei is None
    assert classify(B, 2).redei is not None


def test_is_small_boundary():
    S = plane(16)
    assert is_small(25, S, 1) and not is_small(26, S, 1)
    assert not is_small(8, plane(4), 1) and is_small(7, plane(4), 1)


def test_trivial_witness():
    S = PG(3, field_of_order(3))
    pl = Subspace(S, ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)))
    B = PointSet.of(S, points_of(pl))
    assert trivial_witness(B, 1) == pl
    assert trivial_witness(B, 2) is not None
    assert trivial_witness(B.without(next(iter(B))), 1) is None


@pytest.mark.parametrize("dim,d,q", [(2, 1, 2), (2, 1, 3), (3, 1, 2), (3, 2, 3), (4, 2, 2), (2, 0, 4)])
def test_counts_agree_with_naive_oracle(dim, d, q):
    S = PG(dim, field_of_order(q))
    rng = np.random.default_rng(dim * 100 + q)
    for _ in range(3):
        B = PointSet.from_array(S, np.flatnonzero(rng.random(S.npoints) < 0.4))
        c = intersection_counts(B, d)
        naive = naive_counts(B, d)
        cat = c.cat
        got = {cat.subspace(i): int(v) for i, v in enumerate(c.values)}
        assert got == {U: v for U, v in naive}


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.sampled_from([(2, 1, 2), (2, 1, 3), (3, 1, 2), (3, 2, 2), (3, 2, 3)]))
def test_blocking_and_minimal_match_oracle(seed, shape):
    dim, d, q = shape
    S = PG(dim, field_of_order(q))
    rng = np.random.default_rng(seed)
    B = PointSet.from_array(S, np.flatnonzero(rng.random(S.npoints) < rng.uniform(0.2, 0.8)))
    ok, first = naive_is_blocking(B, d)
    v = is_blocking(B, d)
    assert bool(v) == ok
    if not ok:
        assert v.witness == first
        return
    assert bool(is_minimal(B, d)) == naive_is_minimal(B, d)
    M = minimize(B, d)
    assert M <= B and naive_is_minimal(M, d)
    # monotonicity
    assert is_blocking(B | PointSet.from_array(S, rng.integers(0, S.npoints, size=3)), d)


def test_minimize_matches_repeated_smallest_removal():
    S = PG(3, field_of_order(2))
    rng = np.random.default_rng(4)
    for _ in range(10):
        B = PointSet.from_array(S, np.flatnonzero(rng.random(S.npoints) < 0.7))
        if not is_blocking(B, 1):
            continue
        slow = B
        while True:
            v = is_minimal(slow, 1)
            if v:
                break
            slow = slow.without(v.witness)
        assert minimize(B, 1) == slow


def test_dual_catalog_matches_enumeration():
    S = PG(3, field_of_order(3))
    cat = catalog(S, 2)
    subs = list(enumerate_subspaces(S, 2))
    ids = cat.ordered(np.arange(len(subs)))
    assert [cat.subspace(int(i)) for i in ids] == subs


def test_cap():
    with pytest.raises(InstanceTooLarge):
        is_blocking(line_set(PG(4, field_of_order(4))), 2, cap=50)


def test_witness_reverification():
    C = conic_pg24()
    w = is_blocking(C, 1).witness
    assert all(meet(w, Subspace(C.space, (P.coords,))).rank == 0 for P in C)
