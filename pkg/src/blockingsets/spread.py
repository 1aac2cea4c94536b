"""Field reduction between PG(n-1, q^t) and PG(nt-1, q).

A point of the *big* space PG(n-1, q^t) with representative ``v`` corresponds
to the (t-1)-dimensional *spread element* of the *small* space PG(nt-1, q)
spanned by the expansions of ``v, a v, .., a^(t-1) v`` (``a`` the root of the
extension modulus).  These elements form the Desarguesian spread.  The spread
is never listed: membership is decided by collapsing a small point to the big
point whose element contains it.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from blockingsets.errors import (
    AmbientMismatch,
    DimensionOutOfRange,
    EmptyInput,
    InstanceTooLarge,
    NotScattered,
    PlaneMissesRegulus,
    UnrecognizedIntersection,
)
from blockingsets.gf import ExtensionSpec
from blockingsets.pg import (
    DEFAULT_CAP,
    PG,
    PointSet,
    ProjPoint,
    Subspace,
    gaussian_count,
    meet,
    normalize,
    point_indices,
    points_of,
    random_point,
    span,
    subspace_from_rows,
    subspace_matrices,
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a yes/no check together with the object that decides it."""

    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


class SpreadContext:
    """Fixes ``n`` and ``GF(q^t)``, hence the spread of PG(nt-1, q)."""

    def __init__(self, n: int, ext: ExtensionSpec):
        if n < 1:
            raise DimensionOutOfRange(f"n={n} must be positive")
        self.n = n
        self.ext = ext
        self.t = ext.t
        self.q = ext.base.order
        self.big = PG(n - 1, ext)
        self.small = PG(n * ext.t - 1, ext.base)
        # GF(q)-basis 1, a, .., a^(t-1) of GF(q^t)
        self._basis = [ext.from_coords([int(i == j) for i in range(ext.t)]) for j in range(ext.t)]

    def __eq__(self, other):
        return isinstance(other, SpreadContext) and (self.n, self.ext) == (other.n, other.ext)

    def __hash__(self):
        return hash((self.n, self.ext))

    def __repr__(self):
        return f"SpreadContext(n={self.n}, t={self.t}, q={self.q})"

    @property
    def spread_size(self) -> int:
        return (self.q ** (self.n * self.t) - 1) // (self.q**self.t - 1)

    def expand_rows(self, v) -> list[tuple[int, ...]]:
        """Small vectors spanning the spread element of the big vector ``v``."""
        E = self.ext
        rows = []
        for b in self._basis:
            scaled = [E.mul(b, x) for x in v]
            row = []
            for x in scaled:
                row.extend(E.coords(x))
            rows.append(tuple(row))
        return rows

    def collapse_array(self, idx) -> np.ndarray:
        """Big point indices of an array of small point indices."""
        idx = np.asarray(idx, dtype=np.int64)
        shape = idx.shape
        X = self.small.vcoords(idx.ravel()).reshape(-1, self.n, self.t)
        weights = self.q ** np.arange(self.t, dtype=np.int64)
        V = X @ weights
        big = self.big.vindex(self.big.normalize_rows(V))
        return np.asarray(big, dtype=np.int64).reshape(shape)


@dataclass(frozen=True)
class DSubspace:
    """A small subspace spanned by spread elements: the reduction of a big (level-1)-space."""

    subspace: Subspace
    level: int

    @property
    def dim(self) -> int:
        return self.subspace.dim


def _check(space, expected, what):
    if space != expected:
        raise AmbientMismatch(f"{what} lives in {space}, expected {expected}")


def collapse_point(P: ProjPoint, ctx: SpreadContext) -> ProjPoint:
    """Big point whose spread element contains the small point ``P``."""
    _check(P.space, ctx.small, "point")
    t = ctx.t
    v = [ctx.ext.from_coords(P.coords[i : i + t]) for i in range(0, len(P.coords), t)]
    return normalize(v, ctx.big)


def expand_point(Q: ProjPoint, ctx: SpreadContext) -> Subspace:
    """The spread element of the big point ``Q``."""
    _check(Q.space, ctx.big, "point")
    return subspace_from_rows(ctx.small, ctx.expand_rows(Q.coords))


def field_reduce(S: Subspace, ctx: SpreadContext) -> DSubspace:
    """The D-subspace of dimension rt-1 corresponding to a big subspace of rank r."""
    _check(S.space, ctx.big, "subspace")
    if S.rank == 0:
        raise EmptyInput("field reduction of the empty subspace")
    rows = [row for b in S.basis for row in ctx.expand_rows(b)]
    return DSubspace(subspace_from_rows(ctx.small, rows), S.rank)


def b_map(U: PointSet, ctx: SpreadContext) -> PointSet:
    """The big points whose spread elements meet ``U``."""
    _check(U.space, ctx.small, "point set")
    if not len(U):
        return PointSet(ctx.big, frozenset())
    return PointSet.from_array(ctx.big, np.unique(ctx.collapse_array(U.array())))


def spread_cover(B: PointSet, ctx: SpreadContext) -> PointSet:
    """Union of the spread elements of the big points in ``B``."""
    _check(B.space, ctx.big, "point set")
    out: set[int] = set()
    for Q in B:
        out.update(point_indices(expand_point(Q, ctx)).tolist())
    return PointSet(ctx.small, frozenset(out))


def as_d_subspace(S: Subspace, ctx: SpreadContext) -> DSubspace | None:
    """``S`` as a D-subspace, or None when it is not spanned by spread elements."""
    _check(S.space, ctx.small, "subspace")
    if S.rank == 0 or S.rank % ctx.t:
        return None
    big = span([collapse_point(ProjPoint(ctx.small, row), ctx) for row in S.basis])
    D = field_reduce(big, ctx)
    return D if D.subspace == S else None


def d_subspaces(ctx: SpreadContext, level: int):
    """Every D-subspace reducing a big (level-1)-space, in big lexicographic order."""
    from blockingsets.pg import enumerate_subspaces

    for S in enumerate_subspaces(ctx.big, level - 1):
        yield field_reduce(S, ctx)


def is_scattered(S: Subspace, ctx: SpreadContext, cap: int = DEFAULT_CAP) -> Verdict:
    """True iff every spread element meets ``S`` in at most one point.

    On failure the witness is a spread element meeting ``S`` in two or more points.
    """
    _check(S.space, ctx.small, "subspace")
    if S.npoints > cap:
        raise InstanceTooLarge(f"{S.npoints} points exceed cap {cap}")
    pts = point_indices(S)
    big = ctx.collapse_array(pts)
    uniq, counts = np.unique(big, return_counts=True)
    if np.all(counts <= 1):
        return Verdict(True)
    Q = ctx.big.point(int(uniq[np.argmax(counts > 1)]))
    return Verdict(False, expand_point(Q, ctx))


def _scattered_rows(mats: np.ndarray, ctx: SpreadContext) -> np.ndarray:
    """Vectorized scatteredness of a stack of small bases (shape ``(N, r, nt)``)."""
    r = mats.shape[1]
    from blockingsets.pg import _coefficient_points

    lam = _coefficient_points(ctx.small.field, r)
    out = np.empty(len(mats), dtype=bool)
    step = max(1, (1 << 20) // (len(lam) * ctx.small.n))
    F = ctx.small.field
    for s in range(0, len(mats), step):
        M = mats[s : s + step]
        V = np.zeros((len(M), len(lam), ctx.small.n), dtype=np.int64)
        for k in range(r):
            V = F.vadd(V, F.vmul(lam[None, :, k, None], M[:, None, k, :]))
        big = ctx.collapse_array(ctx.small.vindex(V))
        big.sort(axis=1)
        out[s : s + step] = ~np.any(big[:, 1:] == big[:, :-1], axis=1)
    return out


@dataclass(frozen=True)
class ScatteredResult:
    subspace: Subspace | None
    exhaustive: bool
    restarts: int

    @property
    def found(self) -> bool:
        return self.subspace is not None


def find_scattered(
    d: int,
    ctx: SpreadContext,
    budget: int = 200,
    seed: int = 0,
    exhaustive_threshold: int = 200_000,
    tries_per_step: int = 64,
) -> ScatteredResult:
    """Search for a scattered ``d``-space by randomized greedy extension.

    Each restart grows a subspace point by point, keeping it scattered, and
    gives up after ``tries_per_step`` failed candidates.  After ``budget``
    restarts the full enumeration is run when the number of ``d``-spaces is at
    most ``exhaustive_threshold``; only then does a miss prove nonexistence.
    """
    if d < 0:
        raise DimensionOutOfRange("target dimension must be nonnegative")
    small = ctx.small
    if d > small.dim:
        return ScatteredResult(None, True, 0)
    rng = np.random.default_rng(seed)
    for attempt in range(budget):
        S = small.empty()
        while S.dim < d:
            for _ in range(tries_per_step):
                P = random_point(small, rng)
                if P in S:
                    continue
                T = span([S, P])
                if is_scattered(T, ctx):
                    S = T
                    break
            else:
                break
        if S.dim == d:
            return ScatteredResult(S, False, attempt + 1)
    total = gaussian_count(small.n, d + 1, ctx.q)
    if total <= exhaustive_threshold:
        mats = subspace_matrices(small, d)
        ok = _scattered_rows(mats, ctx)
        hit = np.flatnonzero(ok)
        if len(hit):
            M = mats[hit[0]].tolist()
            return ScatteredResult(Subspace(small, tuple(tuple(r) for r in M)), True, budget)
        return ScatteredResult(None, True, budget)
    return ScatteredResult(None, False, budget)


class RegulusMeet(enum.Enum):
    LINE = "Line"
    TWO_LINES = "TwoLines"
    CONIC = "Conic"


def regulus(ell: Subspace, ctx: SpreadContext) -> list[Subspace]:
    """The spread elements through the points of a scattered line."""
    return [expand_point(collapse_point(P, ctx), ctx) for P in points_of(ell)]


def classify_regulus_plane_meet(ell: Subspace, pi: Subspace, ctx: SpreadContext) -> RegulusMeet:
    """Classify the section of the regulus point set of ``ell`` by the plane ``pi``."""
    _check(ell.space, ctx.small, "line")
    _check(pi.space, ctx.small, "plane")
    if ell.dim != 1 or pi.dim != 2:
        raise DimensionOutOfRange("expected a line and a plane")
    if not is_scattered(ell, ctx):
        raise NotScattered("the line is not scattered")
    elements = regulus(ell, ctx)
    for R in elements:
        if meet(R, pi).rank == 0:
            raise PlaneMissesRegulus(f"the plane is skew to the regulus element {R}")
    cover = set()
    for R in elements:
        cover.update(point_indices(R).tolist())
    section = sorted(set(point_indices(pi).tolist()) & cover)
    small = ctx.small
    pts = [small.point(i) for i in section]
    secset = set(section)

    full_lines = []
    seen = set()
    for A, B in itertools.combinations(pts, 2):
        L = span([A, B])
        if L in seen:
            continue
        seen.add(L)
        idx = set(point_indices(L).tolist())
        if idx <= secset:
            full_lines.append(idx)
    q = ctx.q
    if len(full_lines) == 1 and full_lines[0] == secset:
        return RegulusMeet.LINE
    for X, Y in itertools.combinations(full_lines, 2):
        if X | Y == secset:
            return RegulusMeet.TWO_LINES
    if not full_lines and len(pts) == q + 1:
        if all(span(list(tri)).rank == 3 for tri in itertools.combinations(pts, 3)):
            return RegulusMeet.CONIC
    raise UnrecognizedIntersection(f"plane section of {len(pts)} points fits no class")
