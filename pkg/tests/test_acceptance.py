"""Acceptance suite: twelve end-to-end checks, each printing one PASS/FAIL line.

All comparisons are exact integer or set equalities.  Run it alone with
``pytest tests/test_acceptance.py -v`` (the summary lines bypass capture).
"""

from __future__ import annotations

import time
from collections import Counter

import numpy as np
import pytest

from blockingsets import blocking
from blockingsets.blocking import classify, intersection_counts, is_blocking, is_minimal, spectrum
from blockingsets.construct import (
    ConeSpec,
    cone,
    cone_size,
    construction_1,
    construction_2,
    construction_mps,
    decompose,
    linear_bs,
    planar_base,
    random_cone_spec,
    search_construction_1_frame,
    search_construction_2_frame,
    search_mps_frame,
    to_local,
)
from blockingsets.errors import SelfCheckError, TangentConditionFailed, UnrecognizedIntersection
from blockingsets.gf import field_of_order, make_extension
from blockingsets.pg import (
    PG,
    PointSet,
    Subspace,
    enumerate_subspaces,
    from_local,
    gaussian_count,
    meet,
    points_of,
    random_point,
    random_subspace,
    span,
)
from blockingsets.spread import (
    RegulusMeet,
    SpreadContext,
    b_map,
    classify_regulus_plane_meet,
    d_subspaces,
    find_scattered,
    is_scattered,
    regulus,
)


def ctx_of(n, t, q):
    return SpreadContext(n, make_extension(field_of_order(q), t))


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, text: str, started: float):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number:2d} {'PASS' if ok else 'FAIL'} ({time.perf_counter() - started:.2f}s): {text}")
        assert ok, text

    return emit


def test_01_hyperplanes_contain_one_d_subspace(report):
    t0 = time.perf_counter()
    ctx = ctx_of(3, 2, 2)
    Ds = [D.subspace for D in d_subspaces(ctx, 2)]
    hyper = list(enumerate_subspaces(ctx.small, 4))
    tallies = [sum(meet(D, H) == D for D in Ds) for H in hyper]
    ok = len(Ds) == 21 and len(hyper) == 63 and set(tallies) == {1}
    report(1, ok, f"{len(hyper)} hyperplanes of PG(5,2), each contains exactly one of {len(Ds)} D1-spaces", t0)


def test_02_cone_size_formula(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    results = []
    for i in range(20):
        q = (2, 3, 4)[i % 3]
        F = field_of_order(q)
        m = int(rng.integers(3, 5))
        s = int(rng.integers(-1, m - 2))
        g = int(rng.integers(1, m - s))
        local = PG(g, F)
        base = PointSet.from_array(local, np.flatnonzero(rng.random(local.npoints) < 0.5))
        if not len(base):
            base = PointSet.of(local, [0])
        spec = random_cone_spec(PG(m, F), s, base, rng)
        K = cone(spec)
        results.append(len(K) == q ** (s + 1) * len(base) + (q ** (s + 1) - 1) // (q - 1) == cone_size(s, len(base), q))
    report(2, all(results), f"{sum(results)}/20 random cones match q^(s+1)|B|+(q^(s+1)-1)/(q-1)", t0)


def test_03_linear_blocking_sets(report):
    t0 = time.perf_counter()
    ctx = ctx_of(3, 2, 4)
    pi = random_subspace(ctx.small, 2, np.random.default_rng(3))
    B = linear_bs(pi, ctx, 2)
    spec_ok = set(spectrum(B, 1)) <= {v for v in range(len(B) + 1) if v % 4 == 1}
    ok_random = bool(is_blocking(B, 1)) and bool(is_minimal(B, 1)) and spec_ok
    sc = find_scattered(2, ctx, seed=0)
    S = linear_bs(sc.subspace, ctx, 2)
    rep = classify(S, 1)
    ok_sc = bool(is_scattered(sc.subspace, ctx)) and rep.size == 21 and rep.small and rep.blocking and rep.minimal
    ok_sc = ok_sc and set(rep.spectrum) <= {1, 5, 9, 13, 17, 21}
    report(3, ok_random and ok_sc, f"random plane -> {len(B)} points minimal, 1 mod 4; scattered plane -> {rep.size} points, small", t0)


def test_04_construction_1(report):
    t0 = time.perf_counter()
    ctx = ctx_of(3, 2, 4)
    F = field_of_order(4)
    omega, gamma = search_construction_1_frame(ctx, 2, np.random.default_rng(0))
    res = construction_1(ctx, 2, omega, gamma, planar_base("baer", F), verify=False)
    c = intersection_counts(res.points, 1)
    lines = len(c.values)
    ok = lines == 273 and bool(is_blocking(res.points, 1)) and bool(is_minimal(res.points, 1))
    try:
        construction_1(ctx, 2, omega, gamma, planar_base("hermitian", F))
        rejected = False
    except TangentConditionFailed:
        rejected = True
    report(4, ok and rejected, f"Baer base -> {len(res.points)} points, minimal over {lines} lines; Hermitian base rejected", t0)


def test_05_cone_minimality_equivalence(report):
    t0 = time.perf_counter()
    F = field_of_order(3)
    space = PG(3, F)
    tri = planar_base("triangle", F)
    spec = random_cone_spec(space, 0, tri, np.random.default_rng(5))
    K = cone(spec)
    forward = bool(is_minimal(tri, 1)) and bool(is_minimal(K, 1))
    extras = [P for P in points_of(spec.screen) if P not in spec.base]
    backward = []
    for P in extras:
        base2 = spec.base.with_point(P)
        K2 = cone(ConeSpec(spec.vertex, spec.screen, base2))
        local = to_local(spec.screen, base2)
        backward.append(not is_minimal(local, 1) and bool(is_blocking(K2, 1)) and not is_minimal(K2, 1))
    ok = forward and len(extras) == 7 and all(backward)
    report(5, ok, f"triangle cone in PG(3,3) ({len(K)} points) minimal; {sum(backward)}/{len(extras)} extra points break both", t0)


def test_06_mps(report):
    t0 = time.perf_counter()
    ctx = ctx_of(3, 2, 3)
    tri = planar_base("triangle", field_of_order(3))
    good = construction_mps(search_mps_frame(ctx, tri, np.random.default_rng(7), variant="A"))
    bad = construction_mps(search_mps_frame(ctx, tri, np.random.default_rng(7), variant="A", extra_points=1))
    ok = good.info["blocking"] and good.info["base_minimal"] and good.info["minimal"]
    ok = ok and bad.info["blocking"] and not bad.info["base_minimal"] and not bad.info["minimal"]
    report(6, ok, f"minimal base -> {good.info['size']} points minimal; non-minimal base -> {bad.info['size']} points not minimal", t0)


def test_07_construction_2(report):
    t0 = time.perf_counter()
    ctx = ctx_of(3, 4, 4)
    spec = search_construction_2_frame(ctx, 2, planar_base("hermitian", field_of_order(4)), np.random.default_rng(0))
    res = construction_2(spec, verify=False)
    B = res.points
    lines = gaussian_count(3, 2, 256)
    ok = len(B) == 561 == 9 * 60 + 16 + 4 + 1 == 512 + 64 - 32 + 16 + 1
    ok = ok and lines == 65793 and bool(is_blocking(B, 1)) and bool(is_minimal(B, 1))
    report(7, ok, f"Hermitian base, t=4: |B|={len(B)} (epsilon={res.info['epsilon']}), minimal over {lines} lines of PG(2,256)", t0)


def test_08_scattered(report):
    t0 = time.perf_counter()
    c322 = ctx_of(3, 2, 2)
    # rank bound nt/2 = 3: nothing of rank 4, checked over all 651 three-spaces
    none = find_scattered(3, c322, budget=10)
    exhaustive = not any(is_scattered(S, c322) for S in enumerate_subspaces(c322.small, 3))
    plane = find_scattered(2, c322)
    c223 = ctx_of(2, 2, 3)
    line = find_scattered(1, c223, seed=0)
    c242 = ctx_of(2, 4, 2)
    three = find_scattered(3, c242, seed=0)
    ok = not none.found and none.exhaustive and exhaustive
    ok = ok and line.found and bool(is_scattered(line.subspace, c223))
    ok = ok and three.found and three.subspace.dim == 3 and bool(is_scattered(three.subspace, c242))
    note = "rank-3 plane also certified" if plane.found and is_scattered(plane.subspace, c322) else "no rank-3 plane"
    report(8, ok, f"PG(5,2): no scattered rank-4 space (exhaustive; {note}); scattered line of PG(3,3) and 3-space of PG(7,2) certified", t0)


def test_09_decompose(report):
    t0 = time.perf_counter()
    c = ctx_of(3, 2, 2)
    line = PointSet.of(c.big, points_of(Subspace(c.big, ((1, 0, 0), (0, 1, 0)))))
    herm = PointSet.from_array(c.big, planar_base("hermitian", field_of_order(4)).array())
    c4 = ctx_of(3, 2, 4)
    lin = linear_bs(random_subspace(c4.small, 2, np.random.default_rng(9)), c4, 2)
    cases = [(line, c), (herm, c), (lin, c4)]
    ok = True
    sizes = []
    for B, ctx in cases:
        dec = decompose(B, ctx)
        d = ctx.n * ctx.t - ctx.t - 1
        ok = ok and b_map(dec.reduced, ctx) == B and bool(is_minimal(dec.reduced, d))
        sizes.append(f"{len(dec.cover)}->{len(dec.reduced)}")
    herm_cover = len(decompose(herm, c).cover)
    ok = ok and herm_cover == 27
    report(9, ok, f"cover->reduced sizes {', '.join(sizes)}; Hermitian cover {herm_cover}", t0)


def test_10_line_base_is_linear(report):
    t0 = time.perf_counter()
    ctx = ctx_of(3, 2, 4)
    F = field_of_order(4)
    omega, gamma = search_construction_1_frame(ctx, 2, np.random.default_rng(10))
    base = planar_base("line", F)
    res = construction_1(ctx, 2, omega, gamma, base, verify=False)
    sub = span([omega] + list(from_local(gamma, base)))
    ok = sub.dim == ctx.n * ctx.t - 2 * ctx.t and res.points == linear_bs(sub, ctx, 2)
    report(10, ok, f"line base output equals b_map of the {sub.dim}-space span(vertex, base) ({len(res.points)} points)", t0)


def test_11_regulus_sections(report):
    t0 = time.perf_counter()
    c223 = ctx_of(2, 2, 3)
    ell = find_scattered(1, c223, seed=0).subspace
    tally = Counter(classify_regulus_plane_meet(ell, pi, c223) for pi in enumerate_subspaces(c223.small, 2))
    exhaustive_ok = sum(tally.values()) == 40 and set(tally) <= {RegulusMeet.TWO_LINES, RegulusMeet.CONIC}

    ctx = ctx_of(3, 2, 3)
    rng = np.random.default_rng(11)
    seen = Counter()
    unrecognized = 0
    lines = []
    while len(lines) < 10:
        L = random_subspace(ctx.small, 1, rng)
        if is_scattered(L, ctx):
            lines.append(L)
    for i in range(1000):
        L = lines[i % len(lines)]
        X = span(regulus(L, ctx))
        if i % 4 == 3:
            while True:
                P = random_point(ctx.small, rng)
                if P not in X:
                    break
            pi = span([L, P])
        else:
            pi = random_subspace(ctx.small, 2, rng, inside=X)
        try:
            seen[classify_regulus_plane_meet(L, pi, ctx)] += 1
        except UnrecognizedIntersection:
            unrecognized += 1
    ok = exhaustive_ok and unrecognized == 0 and sum(seen.values()) == 1000
    pg33 = ", ".join(f"{k.value}:{v}" for k, v in sorted(tally.items(), key=lambda kv: kv[0].value))
    wide = ", ".join(f"{k.value}:{v}" for k, v in sorted(seen.items(), key=lambda kv: kv[0].value))
    report(11, ok, f"PG(3,3) all 40 planes -> {pg33}; 1000 PG(5,3) instances -> {wide}, unrecognized {unrecognized}", t0)


def test_12_double_counting_self_check(report, monkeypatch):
    t0 = time.perf_counter()
    rng = np.random.default_rng(12)
    runs = 0
    ok = True
    for dim, d, q in [(2, 1, 2), (2, 1, 4), (3, 1, 3), (3, 2, 3), (4, 2, 2), (4, 3, 2), (5, 3, 2)]:
        S = PG(dim, field_of_order(q))
        for _ in range(4):
            B = PointSet.from_array(S, np.flatnonzero(rng.random(S.npoints) < 0.5))
            c = intersection_counts(B, d)
            ok = ok and int(c.values.sum()) == len(B) * gaussian_count(dim, d, q)
            classify(B, d)
            runs += 1
    # a corrupted count must abort the run
    S = PG(2, field_of_order(3))
    B = PointSet.from_array(S, np.arange(5))
    cat = blocking.catalog(S, 1)
    real = type(cat).counts
    monkeypatch.setattr(type(cat), "counts", lambda self, idx: real(self, idx) + (np.arange(len(real(self, idx))) == 0))
    try:
        classify(B, 1)
        aborted = False
    except SelfCheckError:
        aborted = True
    monkeypatch.undo()
    report(12, ok and aborted, f"identity held on {runs} verification runs; a corrupted count aborts with SelfCheckError", t0)
