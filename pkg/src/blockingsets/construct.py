"""Generators of blocking sets: planar bases, cones, linear sets and the
cone-based constructions in the field-reduced model, plus the decomposition
of a minimal hyperplane blocker into a small-space blocker.

Every construction validates its hypotheses before building and checks the
size identities it relies on afterwards.  Randomized frame searches draw from
a single seeded ``numpy.random.Generator`` and re-run the validator on every
candidate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from blockingsets.blocking import is_blocking, is_minimal, minimize, tangent_counts, tangent_spaces, trivial_witness
from blockingsets.errors import (
    BadFrame,
    BaseGammaMeetNotPoint,
    BaseLineConditionFailed,
    BaseMeetsNu,
    DimensionMismatch,
    FieldShapeMismatch,
    NotBlocking,
    NotMinimalInput,
    SearchExhausted,
    SelfCheckError,
    SpanConditionFailed,
    TangentConditionFailed,
    TExponentTooSmall,
    ValidatorError,
)
from blockingsets.gf import Field
from blockingsets.pg import (
    DEFAULT_CAP,
    PG,
    PointSet,
    ProjPoint,
    Subspace,
    enumerate_subspaces,
    from_local,
    meet,
    point_indices,
    points_of,
    random_point,
    random_point_of,
    random_subspace,
    rref,
    span,
    to_local,
)
from blockingsets.spread import SpreadContext, as_d_subspace, b_map, expand_point, field_reduce, spread_cover

BASE_KINDS = ("line", "baer", "hermitian", "triangle")


@dataclass
class ConstructionResult:
    """A constructed big-space set with the small-space cone it came from."""

    points: PointSet
    cone: PointSet | None = None
    info: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# planar bases


def planar_base(kind: str, F: Field, verify: bool = True) -> PointSet:
    """A minimal blocking set of PG(2, q) with respect to lines."""
    plane = PG(2, F)
    q = F.order
    allpts = plane.vcoords(np.arange(plane.npoints))
    if kind == "line":
        pts = np.flatnonzero(allpts[:, 2] == 0)
    elif kind == "baer":
        if not F.is_square():
            raise FieldShapeMismatch(f"Baer subplane needs a square order, got {q}")
        sub = F.subfield(F.sqrt_order())
        pts = np.flatnonzero(np.isin(allpts, sub).all(axis=1))
    elif kind == "hermitian":
        if not F.is_square():
            raise FieldShapeMismatch(f"Hermitian curve needs a square order, got {q}")
        e = F.sqrt_order() + 1
        powtab = np.array([F.pow(a, e) for a in range(q)], dtype=np.int64)
        val = F.vadd(F.vadd(powtab[allpts[:, 0]], powtab[allpts[:, 1]]), powtab[allpts[:, 2]])
        pts = np.flatnonzero(val == 0)
    elif kind == "triangle":
        if q % 2 == 0:
            raise FieldShapeMismatch(f"projective triangle needs odd order, got {q}")
        vals = sorted({F.mul(a, a) for a in range(q)})
        vecs = []
        for s in vals:
            m = F.neg(s)
            vecs += [(0, 1, m), (m, 0, 1), (1, m, 0)]
        pts = np.unique(plane.vindex(plane.normalize_rows(np.array(vecs, dtype=np.int64))))
    else:
        raise ValueError(f"unknown base kind {kind!r}; expected one of {BASE_KINDS}")
    B = PointSet.from_array(plane, pts)
    if verify:
        if not is_minimal(B, 1):
            raise SelfCheckError(f"{kind} base is not a minimal blocking set")
    return B


def base_size(kind: str, q: int) -> int:
    r = math.isqrt(q)
    return {"line": q + 1, "baer": q + r + 1, "hermitian": q * r + 1, "triangle": 3 * (q + 1) // 2}[kind]


def place(base: PointSet, rows, space: PG) -> PointSet:
    """Image of a planar set under the frame ``rows`` (three independent vectors)."""
    S = span([ProjPoint(space, tuple(r)) for r in _normal_rows(rows, space)])
    if S.rank != base.space.n:
        raise BadFrame("frame rows are dependent")
    return from_local(rows, base, space)


def _normal_rows(rows, space):
    return [tuple(space.normalize_rows(np.array([r], dtype=np.int64))[0]) for r in rows]


def _random_frame(S: Subspace, rng) -> np.ndarray:
    """A random ordered basis of ``S``."""
    F = S.space.field
    k = S.rank
    basis = np.array(S.basis, dtype=np.int64)
    while True:
        G = rng.integers(0, F.order, size=(k, k))
        if len(rref(F, G.tolist(), k)[0]) == k:
            return S.space.combine(G, basis)


def _inverse(F: Field, M) -> np.ndarray:
    k = len(M)
    aug = [list(row) + [int(i == j) for j in range(k)] for i, row in enumerate(np.asarray(M).tolist())]
    rows, piv = rref(F, aug, 2 * k)
    if list(piv[:k]) != list(range(k)):
        raise BadFrame("singular frame")
    return np.array([r[k:] for r in rows[:k]], dtype=np.int64)


# ---------------------------------------------------------------------------
# cones


@dataclass(frozen=True)
class ConeSpec:
    """Vertex ``vertex``, base ``base`` inside ``screen`` with the two disjoint."""

    vertex: Subspace
    screen: Subspace
    base: PointSet

    @property
    def space(self) -> PG:
        return self.vertex.space

    def validate(self):
        if not (self.vertex.space == self.screen.space == self.base.space):
            raise BadFrame("vertex, screen and base must share the ambient space")
        if meet(self.vertex, self.screen).rank:
            raise BadFrame("vertex meets the screen")
        if not self.base <= points_of(self.screen):
            raise BadFrame("base is not contained in the screen")


def cone_size(s: int, base_size: int, q: int) -> int:
    return q ** (s + 1) * base_size + (q ** (s + 1) - 1) // (q - 1)


def cone(spec: ConeSpec) -> PointSet:
    """Union of the spans of the vertex with each base point."""
    spec.validate()
    idx = [point_indices(spec.vertex)]
    for P in spec.base:
        idx.append(point_indices(span([spec.vertex, P])))
    K = PointSet.from_array(spec.space, np.unique(np.concatenate(idx)))
    expect = cone_size(spec.vertex.dim, len(spec.base), spec.space.q)
    if len(K) != expect:
        raise SelfCheckError(f"cone has {len(K)} points, expected {expect}")
    if K & points_of(spec.screen) != spec.base:
        raise SelfCheckError("cone meets the screen outside the base")
    return K


def random_cone_spec(space: PG, s: int, base_local: PointSet, rng) -> ConeSpec:
    """Random vertex of dimension ``s`` and a complementary-enough screen carrying the base."""
    g = base_local.space.dim
    vertex = random_subspace(space, s, rng) if s >= 0 else space.empty()
    while True:
        screen = random_subspace(space, g, rng)
        if meet(screen, vertex).rank == 0:
            break
    frame = _random_frame(screen, rng)
    return ConeSpec(vertex, screen, from_local(frame, base_local, space))


# ---------------------------------------------------------------------------
# linear sets


def linear_bs(pi: Subspace, ctx: SpreadContext, k: int) -> PointSet:
    """The linear set of ``pi``; it blocks the (k-1)-spaces of the big space."""
    n, t = ctx.n, ctx.t
    if pi.space != ctx.small or pi.dim != n * t - k * t:
        raise DimensionMismatch(f"expected a {n * t - k * t}-space of {ctx.small}, got dimension {pi.dim}")
    return b_map(points_of(pi), ctx)


# ---------------------------------------------------------------------------
# Construction 1


def _as_ambient(base: PointSet, plane: Subspace) -> tuple[PointSet, PointSet]:
    """``(base in the ambient, base in local plane coordinates)``."""
    if base.space == plane.space:
        return base, to_local(plane, base)
    if base.space.dim != plane.dim or base.space.field != plane.space.field:
        raise DimensionMismatch("base does not fit the plane")
    return from_local(plane, base), base


def construction_1(
    ctx: SpreadContext,
    k: int,
    omega: Subspace,
    gamma: Subspace,
    base: PointSet,
    bypass: bool = False,
    verify: bool = True,
) -> ConstructionResult:
    """Field-reduced cone with an (nt-kt-2)-dimensional vertex over a planar base.

    The base must be a minimal blocking set of the plane ``gamma`` with every
    point on at least two tangent lines; ``bypass`` skips that check, and then
    minimality of the output is measured instead of being guaranteed.
    """
    n, t = ctx.n, ctx.t
    s = n * t - k * t - 2
    if omega.space != ctx.small or gamma.space != ctx.small:
        raise DimensionMismatch("vertex and plane must live in the small space")
    if omega.dim != s or gamma.dim != 2:
        raise DimensionMismatch(f"need a {s}-dimensional vertex and a plane, got {omega.dim} and {gamma.dim}")
    if meet(omega, gamma).rank:
        raise BadFrame("the plane meets the vertex")
    amb, local = _as_ambient(base, gamma)
    tcount = {}
    if not bypass:
        if not is_blocking(local, 1):
            raise NotBlocking("the base does not block the lines of its plane")
        tcount = tangent_counts(local, 1)
        for x, c in sorted(tcount.items()):
            if c < 2:
                P = from_local(gamma, PointSet.from_array(local.space, np.array([x])))
                raise TangentConditionFailed(f"base point {next(iter(P))} lies on {c} tangent line(s)")
    K = cone(ConeSpec(omega, gamma, amb))
    B = b_map(K, ctx)
    info = {"cone_size": len(K), "size": len(B), "min_tangents": min(tcount.values()) if tcount else None}
    if verify:
        info["blocking"] = bool(is_blocking(B, k - 1))
        info["minimal"] = bool(is_minimal(B, k - 1)) if info["blocking"] else False
        if not info["blocking"]:
            raise SelfCheckError("construction output does not block")
        if not bypass and not info["minimal"]:
            raise SelfCheckError("construction output is not minimal although the validator passed")
    return ConstructionResult(B, K, info)


def search_construction_1_frame(ctx: SpreadContext, k: int, rng, budget: int = 100) -> tuple[Subspace, Subspace]:
    """Random vertex and a plane skew to it."""
    s = ctx.n * ctx.t - k * ctx.t - 2
    for _ in range(budget):
        omega = random_subspace(ctx.small, s, rng) if s >= 0 else ctx.small.empty()
        gamma = random_subspace(ctx.small, 2, rng)
        if meet(omega, gamma).rank == 0:
            return omega, gamma
    raise SearchExhausted("no skew vertex/plane pair found")


# ---------------------------------------------------------------------------
# Construction 2


@dataclass(frozen=True)
class Construction2Spec:
    ctx: SpreadContext
    k: int
    nu: Subspace
    pi: Subspace
    omega: Subspace
    gamma: Subspace
    base: PointSet  # in the small space, inside gamma

    def validate(self):
        ctx, k = self.ctx, self.k
        n, t = ctx.n, ctx.t
        if t < 4:
            raise TExponentTooSmall(f"t={t} < 4")
        m = n * t - k * t
        D = as_d_subspace(self.nu, ctx)
        if D is None or D.level != n - k:
            raise DimensionMismatch(f"nu must be the reduction of a {n - k - 1}-space")
        if self.pi.dim != m + 1 or meet(self.pi, self.nu) != self.nu:
            raise DimensionMismatch(f"Pi must be a {m + 1}-space through nu")
        if span_dim_of_image(self.pi, ctx) != n - k + 1:
            raise SpanConditionFailed(f"the image of Pi spans dimension {span_dim_of_image(self.pi, ctx)}, need {n - k + 1}")
        if self.omega.dim != m - 2 or meet(self.omega, self.pi) != self.omega:
            raise DimensionMismatch(f"Omega must be an {m - 2}-space inside Pi")
        if meet(self.omega, self.nu).dim != m - 4:
            raise DimensionMismatch(f"Omega must meet nu in dimension {m - 4}")
        if self.gamma.dim != 2 or meet(self.gamma, self.pi) != self.gamma or meet(self.gamma, self.omega).rank:
            raise DimensionMismatch("Gamma must be a plane of Pi skew to Omega")
        if not self.base <= points_of(self.gamma):
            raise BadFrame("base is not contained in Gamma")
        if self.base & points_of(self.nu):
            raise BaseMeetsNu("the base meets nu")
        local = to_local(self.gamma, self.base)
        if not is_minimal(local, 1):
            raise NotMinimalInput("the base is not a minimal planar blocking set")


def span_dim_of_image(S: Subspace, ctx: SpreadContext) -> int:
    return span(list(b_map(points_of(S), ctx)), space=ctx.big).dim


def construction_2_closed_form(base_size: int, q: int, t: int) -> int:
    """Size of the output apart from the correction term epsilon."""
    return base_size * (q ** (t - 1) - q ** (t - 3)) + q ** (t - 2) + q ** (t - 3)


def construction_2(spec: Construction2Spec, verify: bool = True) -> ConstructionResult:
    """Field-reduced cone with vertex meeting nu, over a planar base skew to nu."""
    spec.validate()
    ctx = spec.ctx
    K = cone(ConeSpec(spec.omega, spec.gamma, spec.base))
    B = b_map(K, ctx)
    closed = construction_2_closed_form(len(spec.base), ctx.q, ctx.t)
    info = {"cone_size": len(K), "size": len(B), "closed_form": closed, "epsilon": len(B) - closed}
    if verify:
        d = spec.k - 1
        info["blocking"] = bool(is_blocking(B, d))
        info["minimal"] = bool(is_minimal(B, d)) if info["blocking"] else False
        tw = trivial_witness(B, d)
        info["contains_subspace"] = tw is not None
        info["span_dim"] = span(list(B), space=ctx.big).dim
    return ConstructionResult(B, K, info)


def search_construction_2_frame(
    ctx: SpreadContext, k: int, base_local: PointSet, rng, budget: int = 200
) -> Construction2Spec:
    """Seeded random search for a frame passing the Construction 2 validator."""
    n, t = ctx.n, ctx.t
    m = n * t - k * t
    last: Exception | None = None
    for _ in range(budget):
        try:
            nu = field_reduce(random_subspace(ctx.big, n - k - 1, rng), ctx).subspace
            pi = nu
            while pi.dim < m + 1:
                pi = span([pi, random_point(ctx.small, rng)])
            if span_dim_of_image(pi, ctx) != n - k + 1:
                raise SpanConditionFailed("image span")
            core = random_subspace(ctx.small, m - 4, rng, inside=nu) if m >= 4 else ctx.small.empty()
            omega = core
            while omega.dim < m - 2:
                cand = span([omega, random_point_of(pi, rng)])
                if meet(cand, nu) == core:
                    omega = cand
            while True:
                gamma = random_subspace(ctx.small, 2, rng, inside=pi)
                if meet(gamma, omega).rank == 0:
                    break
            base = from_local(_random_frame(gamma, rng), base_local, ctx.small)
            spec = Construction2Spec(ctx, k, nu, pi, omega, gamma, base)
            spec.validate()
            return spec
        except ValidatorError as exc:
            last = exc
    raise SearchExhausted(f"no valid frame within {budget} restarts (last failure: {last})")


# ---------------------------------------------------------------------------
# the MPS construction


@dataclass(frozen=True)
class MpsSpec:
    ctx: SpreadContext
    sigma: Subspace  # reduction of a big (n-2)-space
    sigma_p: Subspace  # (nt-t)-space through sigma
    Y: Subspace  # spread element in sigma
    omega: Subspace  # hyperplane of Y
    gamma_p: Subspace  # (nt-2t+1)-space of sigma_p skew to omega
    base: PointSet  # inside gamma_p

    @property
    def gamma(self) -> Subspace:
        return meet(self.gamma_p, self.sigma)

    def derived(self) -> dict:
        G = self.gamma
        T = meet(G, self.Y)
        hit = self.base & points_of(G)
        return {"Gamma": G, "T": T, "meet": hit}

    def validate(self):
        ctx = self.ctx
        n, t = ctx.n, ctx.t
        D = as_d_subspace(self.sigma, ctx)
        if D is None or D.level != n - 1:
            raise DimensionMismatch(f"Sigma must be the reduction of a {n - 2}-space")
        if self.sigma_p.dim != n * t - t or meet(self.sigma_p, self.sigma) != self.sigma:
            raise DimensionMismatch(f"Sigma' must be an {n * t - t}-space through Sigma")
        DY = as_d_subspace(self.Y, ctx)
        if DY is None or DY.level != 1 or meet(self.Y, self.sigma) != self.Y:
            raise DimensionMismatch("Y must be a spread element inside Sigma")
        if self.omega.dim != t - 2 or meet(self.omega, self.Y) != self.omega:
            raise DimensionMismatch("Omega must be a hyperplane of Y")
        g = n * t - 2 * t + 1
        if self.gamma_p.dim != g or meet(self.gamma_p, self.sigma_p) != self.gamma_p:
            raise DimensionMismatch(f"Gamma' must be a {g}-space inside Sigma'")
        if meet(self.gamma_p, self.omega).rank:
            raise DimensionMismatch("Gamma' meets Omega")
        if not self.base <= points_of(self.gamma_p):
            raise BadFrame("base is not inside Gamma'")
        local = to_local(self.gamma_p, self.base)
        if not is_blocking(local, local.space.dim - 1):
            raise NotBlocking("base does not block the hyperplanes of Gamma'")
        d = self.derived()
        if len(d["meet"]) != 1:
            raise BaseGammaMeetNotPoint(f"base meets Gamma in {len(d['meet'])} points")
        T = d["T"]
        if T.rank != 1:
            raise DimensionMismatch("Gamma does not meet Y in a point")
        Tp = ProjPoint(ctx.small, T.basis[0])
        Tl = to_local(self.gamma_p, PointSet.of(ctx.small, [Tp]))
        T_local = Subspace(Tl.space, (next(iter(Tl)).coords,))
        bl = set(local.array().tolist())
        for L in enumerate_subspaces(local.space, 1, through=T_local):
            rest = set(point_indices(L).tolist()) - {next(iter(Tl)).index}
            if rest <= bl:
                raise BaseLineConditionFailed("a line through T has all its other points in the base")

    def variant(self) -> str:
        d = self.derived()
        Q = next(iter(d["meet"]))
        return "A" if Subspace(self.ctx.small, (Q.coords,)) == d["T"] else "B"


def construction_mps(spec: MpsSpec, verify: bool = True) -> ConstructionResult:
    """Hyperplane blocking set from a cone with vertex inside a spread element."""
    spec.validate()
    ctx = spec.ctx
    K = cone(ConeSpec(spec.omega, spec.gamma_p, spec.base))
    B = b_map(K, ctx)
    info = {"cone_size": len(K), "size": len(B), "variant": spec.variant()}
    if verify:
        d = ctx.n - 2
        info["blocking"] = bool(is_blocking(B, d))
        info["minimal"] = bool(is_minimal(B, d)) if info["blocking"] else False
        local = to_local(spec.gamma_p, spec.base)
        info["base_minimal"] = bool(is_minimal(local, local.space.dim - 1))
    return ConstructionResult(B, K, info)


def search_mps_frame(
    ctx: SpreadContext,
    base_local: PointSet,
    rng,
    budget: int = 200,
    extra_points: int = 0,
    variant: str | None = None,
) -> MpsSpec:
    """Seeded random frame for the MPS construction carrying a planar base.

    The planar base is placed in a plane ``pi0`` of Gamma' so that ``pi0``
    meets Gamma in a tangent line of the base; then the base meets Gamma in
    exactly the tangency point.  ``extra_points`` further points of ``pi0``
    off Gamma are added (the first ones in index order that keep the
    validator passing), which makes the base non-minimal.
    """
    n, t = ctx.n, ctx.t
    small = ctx.small
    F = small.field
    last: Exception | None = None
    tangents = [(P, L) for P in base_local for L in tangent_spaces(base_local, P, 1)]
    if not tangents:
        raise NotMinimalInput("the planar base has no tangent lines")
    for _ in range(budget):
        try:
            big_s = random_subspace(ctx.big, n - 2, rng)
            sigma = field_reduce(big_s, ctx).subspace
            sigma_p = sigma
            while sigma_p.dim < n * t - t:
                sigma_p = span([sigma_p, random_point(small, rng)])
            Y = expand_point(random_point_of(big_s, rng), ctx)
            omega = random_subspace(small, t - 2, rng, inside=Y)
            g = n * t - 2 * t + 1
            gamma_p = random_subspace(small, g, rng, inside=sigma_p)
            if meet(gamma_p, omega).rank:
                continue
            gamma = meet(gamma_p, sigma)
            T = meet(gamma, Y)
            if T.rank != 1:
                continue
            want_A = variant == "A" or (variant is None and rng.integers(2) == 0)
            if want_A:
                # a plane of Gamma' through T other than Gamma
                pi0 = T
                while pi0.dim < 2:
                    pi0 = span([pi0, random_point_of(gamma_p, rng)])
            else:
                pi0 = random_subspace(small, 2, rng, inside=gamma_p)
            ell0 = meet(pi0, gamma)
            if ell0.rank != 2:
                continue
            Pbar, Lbar = tangents[int(rng.integers(len(tangents)))]
            # local frame (a, b, c): a the tangency point, b on the tangent, c off it
            a = np.array(Pbar.coords)
            others = [R for R in points_of(Lbar) if R != Pbar]
            b = np.array(others[int(rng.integers(len(others)))].coords)
            while True:
                c = np.array(random_point(base_local.space, rng).coords)
                if span([ProjPoint(base_local.space, tuple(c)), Lbar]).rank == 3:
                    break
            Lmat = np.array([a, b, c])
            A = np.array(T.basis[0]) if want_A else np.array(random_point_of(ell0, rng).coords)
            while True:
                Bv = np.array(random_point_of(ell0, rng).coords)
                if span([ProjPoint(small, tuple(A)), ProjPoint(small, tuple(Bv))]).rank == 2:
                    break
            while True:
                C = np.array(random_point_of(pi0, rng).coords)
                if span([ProjPoint(small, tuple(C)), ell0]).rank == 3:
                    break
            frame = small.combine(_inverse(F, Lmat), np.array([A, Bv, C]))
            base = from_local(frame, base_local, small)
            spec = MpsSpec(ctx, sigma, sigma_p, Y, omega, gamma_p, base)
            spec.validate()
            if variant is not None and spec.variant() != variant:
                continue
            for _ in range(extra_points):
                gpts = points_of(gamma)
                for Q in points_of(pi0):
                    if Q in spec.base or Q in gpts:
                        continue
                    trial = MpsSpec(ctx, sigma, sigma_p, Y, omega, gamma_p, spec.base.with_point(Q))
                    try:
                        trial.validate()
                    except ValidatorError:
                        continue
                    spec = trial
                    break
                else:
                    raise BaseLineConditionFailed("no admissible extra point")
            return spec
        except ValidatorError as exc:
            last = exc
    raise SearchExhausted(f"no valid MPS frame within {budget} restarts (last failure: {last})")


# ---------------------------------------------------------------------------
# decomposition


@dataclass
class Decomposition:
    cover: PointSet  # union of the spread elements of B
    reduced: PointSet  # the minimal subset B'


def decompose(B: PointSet, ctx: SpreadContext, cap: int = DEFAULT_CAP) -> Decomposition:
    """Write a minimal hyperplane blocker ``B`` as the image of a small-space blocker."""
    if B.space != ctx.big:
        raise DimensionMismatch(f"{B.space} is not the big space of {ctx}")
    if not is_blocking(B, ctx.n - 2, cap) or not is_minimal(B, ctx.n - 2, cap):
        raise NotMinimalInput("input is not a minimal blocking set w.r.t. hyperplanes")
    cover = spread_cover(B, ctx)
    d = ctx.n * ctx.t - ctx.t - 1
    reduced = minimize(cover, d, cap)
    if b_map(reduced, ctx) != B:
        raise SelfCheckError("the reduced set does not map back onto the input")
    if not is_minimal(reduced, d, cap):
        raise SelfCheckError("the reduced set is not minimal")
    return Decomposition(cover, reduced)
