"""Projective spaces PG(m, q): points, canonical subspaces, span and meet.

Points are stored by their *index*: the position of the normalized coordinate
vector (first nonzero entry equal to 1) in the lexicographic order of all
normalized vectors, comparing element codes as integers.  Index order is
therefore the lexicographic order used for witnesses and tie-breaks.

Subspaces carry their reduced row echelon basis, which makes equality and
hashing canonical.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from blockingsets.errors import (
    AmbientMismatch,
    BadFrame,
    DimensionOutOfRange,
    EmptyInput,
    InstanceTooLarge,
    InvalidCode,
    PointInVertex,
    ZeroVector,
)
from blockingsets.gf import Field

DEFAULT_CAP = 10**7
_CHUNK = 1 << 21


def gaussian_count(m: int, d: int, q: int) -> int:
    """Number of rank-``d`` subspaces of a rank-``m`` vector space over GF(q)."""
    if not 0 <= d <= m:
        return 0
    num = den = 1
    for i in range(d):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


# ---------------------------------------------------------------------------
# scalar linear algebra over a Field


def rref(F: Field, rows: Iterable[Sequence[int]], ncols: int):
    """Reduced row echelon form; returns (nonzero rows as tuples, pivot columns)."""
    M = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        lead = M[r][c]
        if lead != 1:
            inv = F.inv(lead)
            M[r] = [F.mul(inv, x) for x in M[r]]
        row = M[r]
        for i in range(len(M)):
            f = M[i][c]
            if i != r and f:
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], row)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in M[:r]], pivots


def annihilator(F: Field, basis: Sequence[Sequence[int]], pivots: Sequence[int], ncols: int):
    """Basis of ``{u : sum_j x_j u_j = 0 for every row x}`` for an RREF basis."""
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        u = [0] * ncols
        u[f] = 1
        for row, c in zip(basis, pivots):
            u[c] = F.neg(row[f])
        out.append(tuple(u))
    return out


def dot(F: Field, u: Sequence[int], v: Sequence[int]) -> int:
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = F.add(s, F.mul(a, b))
    return s


# ---------------------------------------------------------------------------
# spaces, points, subspaces


class PG:
    """The projective space of dimension ``dim`` over ``field``."""

    def __init__(self, dim: int, field: Field):
        if dim < 0:
            raise DimensionOutOfRange(f"projective dimension {dim} < 0")
        self.dim = dim
        self.field = field
        self.n = dim + 1
        self.q = field.order
        self.npoints = (self.q**self.n - 1) // (self.q - 1)
        self._small = self.q**self.n < 2**62

    def __eq__(self, other):
        return isinstance(other, PG) and self.dim == other.dim and self.field == other.field

    def __hash__(self):
        return hash((self.dim, self.field))

    def __repr__(self):
        return f"PG({self.dim},{self.q})"

    # index <-> coordinates ------------------------------------------------

    def index(self, coords: Sequence[int]) -> int:
        q, n = self.q, self.n
        i = next(k for k, c in enumerate(coords) if c)
        L = n - 1 - i
        rest = 0
        for c in coords[i + 1 :]:
            rest = rest * q + c
        return (q**L - 1) // (q - 1) + rest

    def coords(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.npoints:
            raise InvalidCode(f"point index {index} outside {self}")
        q, n = self.q, self.n
        L = 0
        while (q ** (L + 1) - 1) // (q - 1) <= index:
            L += 1
        rest = index - (q**L - 1) // (q - 1)
        tail = []
        for _ in range(L):
            rest, r = divmod(rest, q)
            tail.append(r)
        return (0,) * (n - 1 - L) + (1,) + tuple(reversed(tail))

    def vindex(self, V) -> np.ndarray:
        """Indices of normalized coordinate rows ``V`` (shape ``(..., n)``)."""
        V = np.asarray(V, dtype=np.int64)
        if not self._small:
            flat = V.reshape(-1, self.n)
            return np.array([self.index(tuple(r)) for r in flat.tolist()], dtype=object).reshape(V.shape[:-1])
        q, n = self.q, self.n
        weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
        val = V @ weights
        first = np.argmax(V != 0, axis=-1)
        L = n - 1 - first
        qL = q**L
        return val - qL + (qL - 1) // (q - 1)

    def vcoords(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        q, n = self.q, self.n
        starts = (q ** np.arange(n + 1, dtype=np.int64) - 1) // (q - 1)
        L = np.searchsorted(starts, idx, side="right") - 1
        val = idx - starts[L] + q**L
        out = np.empty(idx.shape + (n,), dtype=np.int64)
        for j in range(n - 1, -1, -1):
            out[..., j] = val % q
            val = val // q
        return out

    def normalize_rows(self, V) -> np.ndarray:
        """Scale every nonzero row so its first nonzero entry is 1."""
        V = np.asarray(V, dtype=np.int64)
        nz = V != 0
        if not np.all(nz.any(axis=-1)):
            raise ZeroVector("zero vector has no projective point")
        first = np.argmax(nz, axis=-1)
        lead = np.take_along_axis(V, first[..., None], axis=-1)
        return self.field.vmul(V, self.field.vinv(lead))

    def combine(self, coeffs, rows) -> np.ndarray:
        """Rows of ``coeffs @ rows`` over the field (coeffs ``(k, r)``, rows ``(r, n)``)."""
        F = self.field
        coeffs = np.asarray(coeffs, dtype=np.int64)
        rows = np.asarray(rows, dtype=np.int64)
        out = np.zeros(coeffs.shape[:-1] + (rows.shape[-1],), dtype=np.int64)
        for k in range(rows.shape[-2]):
            out = F.vadd(out, F.vmul(coeffs[..., k, None], rows[..., k, :]))
        return out

    def point(self, index: int) -> ProjPoint:
        return ProjPoint(self, self.coords(index))

    def all_points(self) -> PointSet:
        return PointSet(self, frozenset(range(self.npoints)))

    def full(self) -> Subspace:
        return Subspace(self, tuple(tuple(int(i == j) for j in range(self.n)) for i in range(self.n)))

    def empty(self) -> Subspace:
        return Subspace(self, ())


@dataclass(frozen=True)
class ProjPoint:
    space: PG
    coords: tuple[int, ...]

    @property
    def index(self) -> int:
        return self.space.index(self.coords)

    def __repr__(self):
        return f"P{self.coords}"


@dataclass(frozen=True)
class Subspace:
    """Subspace given by a canonical RREF basis; rank 0 is the empty subspace."""

    space: PG
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis) - 1

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, c in enumerate(row) if c) for row in self.basis]

    @property
    def npoints(self) -> int:
        q = self.space.q
        return (q**self.rank - 1) // (q - 1)

    def contains(self, item) -> bool:
        if isinstance(item, Subspace):
            return meet(self, item) == item
        coords = item.coords if isinstance(item, ProjPoint) else tuple(item)
        F = self.space.field
        residual = list(coords)
        for row, c in zip(self.basis, self.pivots):
            f = residual[c]
            if f:
                residual = [F.sub(a, F.mul(f, b)) for a, b in zip(residual, row)]
        return not any(residual)

    __contains__ = contains

    def dual(self) -> list[tuple[int, ...]]:
        """Basis of the annihilator (hyperplane equations of this subspace)."""
        return annihilator(self.space.field, self.basis, self.pivots, self.space.n)

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.space}, basis={[list(r) for r in self.basis]})"


@dataclass(frozen=True)
class PointSet:
    """A finite set of points of one space, keyed by point index."""

    space: PG
    indices: frozenset

    @classmethod
    def of(cls, space: PG, items: Iterable) -> PointSet:
        idx = set()
        for it in items:
            if isinstance(it, ProjPoint):
                if it.space != space:
                    raise AmbientMismatch(f"{it} is not a point of {space}")
                idx.add(it.index)
            elif isinstance(it, (int, np.integer)):
                idx.add(int(it))
            else:
                idx.add(normalize(it, space).index)
        return cls(space, frozenset(idx))

    @classmethod
    def from_array(cls, space: PG, idx) -> PointSet:
        return cls(space, frozenset(int(i) for i in np.asarray(idx).ravel().tolist()))

    def __len__(self):
        return len(self.indices)

    def __iter__(self) -> Iterator[ProjPoint]:
        for i in sorted(self.indices):
            yield self.space.point(i)

    def __contains__(self, item):
        if isinstance(item, ProjPoint):
            return item.space == self.space and item.index in self.indices
        return item in self.indices

    def array(self) -> np.ndarray:
        return np.array(sorted(self.indices), dtype=np.int64)

    def coords_array(self) -> np.ndarray:
        return self.space.vcoords(self.array()).reshape(len(self), self.space.n)

    def _check(self, other):
        if other.space != self.space:
            raise AmbientMismatch(f"{self.space} vs {other.space}")

    def __or__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.space, self.indices | other.indices)

    def __and__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.space, self.indices & other.indices)

    def __sub__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.space, self.indices - other.indices)

    def __le__(self, other: PointSet) -> bool:
        return self.space == other.space and self.indices <= other.indices

    def with_point(self, P: ProjPoint) -> PointSet:
        return PointSet(self.space, self.indices | {P.index})

    def without(self, P: ProjPoint) -> PointSet:
        return PointSet(self.space, self.indices - {P.index})

    def __repr__(self):
        return f"PointSet({len(self)} points of {self.space})"


# ---------------------------------------------------------------------------
# operations


def normalize(v: Sequence[int], space: PG) -> ProjPoint:
    F = space.field
    v = [F.check(int(c)) for c in v]
    if len(v) != space.n:
        raise AmbientMismatch(f"vector of length {len(v)} is not in {space}")
    lead = next((c for c in v if c), 0)
    if not lead:
        raise ZeroVector("the zero vector is not a projective point")
    if lead != 1:
        inv = F.inv(lead)
        v = [F.mul(inv, c) for c in v]
    return ProjPoint(space, tuple(v))


def _space_of(items) -> PG | None:
    spaces = {it.space for it in items}
    if len(spaces) > 1:
        raise AmbientMismatch("inputs live in different spaces")
    return spaces.pop() if spaces else None


def subspace_from_rows(space: PG, rows: Iterable[Sequence[int]]) -> Subspace:
    basis, _ = rref(space.field, [tuple(int(c) for c in r) for r in rows], space.n)
    return Subspace(space, tuple(basis))


def span(items: Iterable, space: PG | None = None) -> Subspace:
    """Smallest subspace containing every given point and subspace."""
    items = list(items)
    found = _space_of(items)
    if found is not None and space is not None and found != space:
        raise AmbientMismatch(f"{found} vs {space}")
    space = found or space
    if space is None:
        raise EmptyInput("span of nothing needs an explicit ambient space")
    rows = []
    for it in items:
        if isinstance(it, ProjPoint):
            rows.append(it.coords)
        else:
            rows.extend(it.basis)
    return subspace_from_rows(space, rows)


def meet(A: Subspace, B: Subspace) -> Subspace:
    """Intersection of two subspaces."""
    if A.space != B.space:
        raise AmbientMismatch(f"{A.space} vs {B.space}")
    space = A.space
    F = space.field
    eqs = A.dual() + B.dual()
    basis, piv = rref(F, eqs, space.n)
    return subspace_from_rows(space, annihilator(F, basis, piv, space.n))


@functools.lru_cache(maxsize=64)
def _coefficient_points(field: Field, r: int) -> np.ndarray:
    return PG(r - 1, field).vcoords(np.arange((field.order**r - 1) // (field.order - 1)))


def point_indices(S: Subspace) -> np.ndarray:
    """Sorted point indices of ``S`` (vectorized)."""
    if S.rank == 0:
        return np.zeros(0, dtype=np.int64)
    lam = _coefficient_points(S.space.field, S.rank)
    V = S.space.combine(lam, np.array(S.basis, dtype=np.int64))
    return np.sort(S.space.vindex(V))


def points_of(S: Subspace) -> PointSet:
    return PointSet.from_array(S.space, point_indices(S))


def _rref_array(q: int, n: int, r: int) -> np.ndarray:
    """All rank-``r`` RREF matrices with ``n`` columns, sorted lexicographically."""
    if r == 0:
        return np.zeros((1, 0, n), dtype=np.int64)
    blocks = []
    for piv in itertools.combinations(range(n), r):
        pset = set(piv)
        free = [(i, j) for i in range(r) for j in range(piv[i] + 1, n) if j not in pset]
        count = q ** len(free)
        M = np.zeros((count, r, n), dtype=np.int64)
        M[:, list(range(r)), list(piv)] = 1
        if free:
            vals = np.arange(count, dtype=np.int64)
            digits = np.empty((count, len(free)), dtype=np.int64)
            for k in range(len(free) - 1, -1, -1):
                digits[:, k] = vals % q
                vals //= q
            M[:, [i for i, _ in free], [j for _, j in free]] = digits
        blocks.append(M)
    allm = np.concatenate(blocks)
    flat = allm.reshape(len(allm), r * n)
    order = np.lexsort(flat.T[::-1])
    return allm[order]


def _check_dim(space: PG, d: int):
    if not -1 <= d <= space.dim:
        raise DimensionOutOfRange(f"dimension {d} outside [-1, {space.dim}] for {space}")


def subspace_matrices(space: PG, d: int, through: Subspace | None = None, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Canonical bases of all ``d``-subspaces (optionally through ``through``), sorted."""
    _check_dim(space, d)
    q, n, r = space.q, space.n, d + 1
    if through is None or through.rank == 0:
        count = gaussian_count(n, r, q)
        if count > cap:
            raise InstanceTooLarge(f"{count} subspaces of dimension {d} in {space} exceed cap {cap}")
        return _rref_array(q, n, r)
    if through.space != space:
        raise AmbientMismatch(f"{through.space} vs {space}")
    w = through.rank
    if w > r:
        raise DimensionOutOfRange(f"cannot pass a {d}-space through a {through.dim}-space")
    count = gaussian_count(n - w, r - w, q)
    if count > cap:
        raise InstanceTooLarge(f"{count} subspaces exceed cap {cap}")
    free_cols = [c for c in range(n) if c not in set(through.pivots)]
    quotient = _rref_array(q, len(free_cols), r - w)
    out = []
    base_rows = list(through.basis)
    for M in quotient.tolist():
        rows = []
        for row in M:
            full = [0] * n
            for c, v in zip(free_cols, row):
                full[c] = v
            rows.append(full)
        basis, _ = rref(space.field, base_rows + rows, n)
        out.append(basis)
    arr = np.array(out, dtype=np.int64).reshape(len(out), r, n)
    flat = arr.reshape(len(arr), r * n)
    return arr[np.lexsort(flat.T[::-1])]


def enumerate_subspaces(space: PG, d: int, through: Subspace | None = None, cap: int = DEFAULT_CAP) -> Iterator[Subspace]:
    """Every ``d``-dimensional subspace (through ``through`` if given), once each,
    in lexicographic order of canonical bases."""
    for M in subspace_matrices(space, d, through, cap).tolist():
        yield Subspace(space, tuple(tuple(row) for row in M))


def project(P: ProjPoint, vertex: Subspace, screen: Subspace) -> ProjPoint:
    """Projection of ``P`` from ``vertex`` onto the complementary ``screen``."""
    if not (P.space == vertex.space == screen.space):
        raise AmbientMismatch("point, vertex and screen must share the ambient space")
    if meet(vertex, screen).rank != 0 or vertex.rank + screen.rank != P.space.n:
        raise BadFrame("vertex and screen are not complementary")
    if P in vertex:
        raise PointInVertex(f"{P} lies in the vertex")
    image = meet(span([vertex, P]), screen)
    return ProjPoint(P.space, image.basis[0])


def to_local(S: Subspace, points: PointSet) -> PointSet:
    """Coordinates of ``points`` (inside ``S``) in the frame given by S's RREF basis."""
    local = PG(S.dim, S.space.field)
    if not len(points):
        return PointSet(local, frozenset())
    X = points.coords_array()
    piv = S.pivots
    lam = X[:, piv]
    back = S.space.combine(lam, np.array(S.basis, dtype=np.int64))
    if not np.array_equal(back, X):
        raise AmbientMismatch("some points do not lie in the subspace")
    return PointSet.from_array(local, local.vindex(lam))


def from_local(rows: Sequence[Sequence[int]] | Subspace, local_points: PointSet, space: PG | None = None) -> PointSet:
    """Image of points of ``PG(r-1, q)`` under ``lambda -> sum lambda_i rows_i``."""
    if isinstance(rows, Subspace):
        space = rows.space
        rows = rows.basis
    if space is None:
        raise EmptyInput("target space required")
    if not len(local_points):
        return PointSet(space, frozenset())
    R = np.array(rows, dtype=np.int64)
    V = space.combine(local_points.coords_array(), R)
    return PointSet.from_array(space, space.vindex(space.normalize_rows(V)))


def random_point(space: PG, rng: np.random.Generator) -> ProjPoint:
    while True:
        v = rng.integers(0, space.q, size=space.n)
        if v.any():
            return normalize(v.tolist(), space)


def random_point_of(S: Subspace, rng: np.random.Generator) -> ProjPoint:
    """Uniform point of the subspace ``S``."""
    local = PG(S.dim, S.space.field)
    lam = random_point(local, rng).coords
    v = S.space.combine(np.array([lam]), np.array(S.basis, dtype=np.int64))[0]
    return normalize(v.tolist(), S.space)


def random_subspace(space: PG, d: int, rng: np.random.Generator, inside: Subspace | None = None) -> Subspace:
    """Uniform-ish random ``d``-subspace (of ``inside`` when given)."""
    host = inside if inside is not None else space.full()
    if d > host.dim:
        raise DimensionOutOfRange(f"no {d}-space inside a {host.dim}-space")
    while True:
        pts = [random_point_of(host, rng) for _ in range(d + 1)]
        S = span(pts, space=space)
        if S.dim == d:
            return S
