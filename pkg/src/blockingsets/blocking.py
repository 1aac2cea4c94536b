"""Blocking, minimality, exponent and classification by exhaustive enumeration.

Everything is driven by a *catalog* of the ``d``-subspaces of a space, which
answers two questions: how many points of ``B`` lie on each subspace (the
intersection counts) and which subspaces pass through a given point.

Two catalogs exist.  Hyperplanes are handled through duality: the hyperplanes
through a point ``P`` are the points of ``P^perp``, so a hyperplane is named by
the index of its dual vector and nothing is stored.  Other dimensions keep the
point indices of every subspace in one array, built in chunks.  Subspace ids
in the dense catalog follow the lexicographic order of canonical bases; the
dual catalog converts to that order whenever a witness is chosen.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from blockingsets.errors import (
    AmbientMismatch,
    DimensionOutOfRange,
    InstanceTooLarge,
    NotBlocking,
    PointNotInSet,
    SelfCheckError,
)
from blockingsets.pg import (
    DEFAULT_CAP,
    PG,
    PointSet,
    ProjPoint,
    Subspace,
    _coefficient_points,
    annihilator,
    gaussian_count,
    point_indices,
    subspace_from_rows,
    subspace_matrices,
)
from blockingsets.spread import Verdict

_CHUNK = 1 << 21


class _Catalog:
    space: PG
    d: int
    nsub: int

    def counts(self, idx: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def through(self, x: int) -> np.ndarray:
        raise NotImplementedError

    def subspace(self, sid: int) -> Subspace:
        raise NotImplementedError

    def first(self, ids) -> int:
        """The id among ``ids`` whose canonical basis is lexicographically least."""
        raise NotImplementedError

    def ordered(self, ids) -> np.ndarray:
        raise NotImplementedError


class _DenseCatalog(_Catalog):
    def __init__(self, space: PG, d: int, cap: int):
        self.space, self.d = space, d
        mats = subspace_matrices(space, d, cap=cap)
        self.nsub = len(mats)
        r = d + 1
        lam = _coefficient_points(space.field, r)
        k = len(lam)
        F = space.field
        pts = np.empty((self.nsub, k), dtype=np.int64)
        step = max(1, _CHUNK // (k * space.n))
        for s in range(0, self.nsub, step):
            M = mats[s : s + step]
            V = np.zeros((len(M), k, space.n), dtype=np.int64)
            for j in range(r):
                V = F.vadd(V, F.vmul(lam[None, :, j, None], M[:, None, j, :]))
            pts[s : s + step] = space.vindex(V)
        self._mats = mats
        self.pts = pts
        flat = pts.ravel()
        order = np.argsort(flat, kind="stable")
        self._inv = order // k
        self._start = np.searchsorted(flat[order], np.arange(space.npoints + 1))

    def counts(self, idx):
        mask = np.zeros(self.space.npoints, dtype=bool)
        mask[idx] = True
        return mask[self.pts].sum(axis=1)

    def through(self, x):
        return self._inv[self._start[x] : self._start[x + 1]]

    def subspace(self, sid):
        return Subspace(self.space, tuple(tuple(r) for r in self._mats[sid].tolist()))

    def first(self, ids):
        return int(np.min(ids))

    def ordered(self, ids):
        return np.sort(np.asarray(ids, dtype=np.int64))


class _DualCatalog(_Catalog):
    """Hyperplanes named by the point index of their normalized dual vector."""

    def __init__(self, space: PG):
        self.space, self.d = space, space.dim - 1
        self.nsub = space.npoints
        self._through: dict[int, np.ndarray] = {}

    def through(self, x):
        got = self._through.get(x)
        if got is None:
            S = self.space
            rows, piv = [S.coords(x)], [next(i for i, c in enumerate(S.coords(x)) if c)]
            ann = annihilator(S.field, rows, piv, S.n)
            got = point_indices(subspace_from_rows(S, ann))
            if len(self._through) < 1 << 16:
                self._through[x] = got
        return got

    def counts(self, idx):
        if len(idx) == 0:
            return np.zeros(self.nsub, dtype=np.int64)
        allh = np.concatenate([self.through(int(x)) for x in idx])
        return np.bincount(allh, minlength=self.nsub)

    def _keys(self, ids):
        """Row-major canonical bases of the hyperplanes ``ids`` (shape ``(len, n-1, n)``)."""
        S = self.space
        F = S.field
        U = S.vcoords(np.asarray(ids, dtype=np.int64))
        n = S.n
        nz = U != 0
        last = n - 1 - np.argmax(nz[:, ::-1], axis=1)
        ul = U[np.arange(len(U)), last]
        coef = F.vneg(F.vmul(U, F.vinv(ul)[:, None]))
        out = np.zeros((len(U), n - 1, n), dtype=np.int64)
        rows = np.arange(len(U))
        # basis row for each column j != last: e_j - (u_j / u_last) e_last
        for slot in range(n - 1):
            j = np.where(slot < last, slot, slot + 1)
            out[rows, slot, j] = 1
            before = j < last
            out[rows[before], slot, last[before]] = coef[rows[before], j[before]]
        return out

    def ordered(self, ids):
        ids = np.asarray(ids, dtype=np.int64)
        if len(ids) == 0:
            return ids
        flat = self._keys(ids).reshape(len(ids), -1)
        return ids[np.lexsort(flat.T[::-1])]

    def first(self, ids):
        return int(self.ordered(ids)[0])

    def subspace(self, sid):
        return Subspace(self.space, tuple(tuple(r) for r in self._keys([sid])[0].tolist()))


@functools.lru_cache(maxsize=8)
def _catalog(space: PG, d: int, cap: int) -> _Catalog:
    if not 0 <= d <= space.dim:
        raise DimensionOutOfRange(f"cannot block {d}-spaces of {space}")
    if d == space.dim - 1 and d > 0:
        if space.npoints > cap:
            raise InstanceTooLarge(f"{space.npoints} hyperplanes exceed cap {cap}")
        return _DualCatalog(space)
    count = gaussian_count(space.n, d + 1, space.q)
    if count > cap:
        raise InstanceTooLarge(f"{count} subspaces of dimension {d} exceed cap {cap}")
    return _DenseCatalog(space, d, cap)


def catalog(space: PG, d: int, cap: int = DEFAULT_CAP) -> _Catalog:
    return _catalog(space, d, cap)


# ---------------------------------------------------------------------------
# intersection counts


@dataclass
class Counts:
    """Intersection numbers of ``B`` with every ``d``-subspace, self-checked."""

    B: PointSet
    d: int
    cat: _Catalog
    values: np.ndarray

    @property
    def space(self) -> PG:
        return self.B.space


def intersection_counts(B: PointSet, d: int, cap: int = DEFAULT_CAP) -> Counts:
    cat = catalog(B.space, d, cap)
    idx = B.array()
    values = cat.counts(idx)
    # double counting: every point lies on the same number of d-spaces
    expect = len(B) * gaussian_count(B.space.dim, d, B.space.q)
    got = int(values.sum())
    if got != expect:
        raise SelfCheckError(f"intersection sum {got} != {expect}")
    return Counts(B, d, cat, values)


def _blocking_counts(B: PointSet, d: int, cap: int) -> Counts:
    c = intersection_counts(B, d, cap)
    if np.any(c.values == 0):
        raise NotBlocking(f"some {d}-space misses the set")
    return c


# ---------------------------------------------------------------------------
# public checks


def is_blocking(B: PointSet, d: int, cap: int = DEFAULT_CAP) -> Verdict:
    """True iff every ``d``-subspace meets ``B``; otherwise the first skew subspace."""
    c = intersection_counts(B, d, cap)
    skew = np.flatnonzero(c.values == 0)
    if len(skew) == 0:
        return Verdict(True)
    return Verdict(False, c.cat.subspace(c.cat.first(skew)))


def _tangent_ids(c: Counts, x: int) -> np.ndarray:
    ids = c.cat.through(x)
    return ids[c.values[ids] == 1]


def tangent_spaces(B: PointSet, P: ProjPoint, d: int, limit: int | None = None, cap: int = DEFAULT_CAP) -> list[Subspace]:
    """The ``d``-subspaces through ``P`` meeting ``B`` only in ``P``, in canonical order."""
    if P not in B:
        raise PointNotInSet(f"{P} is not in the set")
    c = intersection_counts(B, d, cap)
    ids = c.cat.ordered(_tangent_ids(c, P.index))
    if limit is not None:
        ids = ids[:limit]
    return [c.cat.subspace(int(s)) for s in ids]


def tangent_counts(B: PointSet, d: int, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Number of tangent ``d``-spaces at every point of ``B`` (keyed by point index)."""
    c = intersection_counts(B, d, cap)
    return {int(x): int(len(_tangent_ids(c, int(x)))) for x in B.array()}


def _first_nonessential(c: Counts) -> int | None:
    for x in c.B.array().tolist():
        if not np.any(c.values[c.cat.through(x)] == 1):
            return x
    return None


def is_minimal(B: PointSet, d: int, cap: int = DEFAULT_CAP) -> Verdict:
    """True iff ``B`` blocks ``d``-spaces and every point is essential.

    On failure the witness is the first non-essential point.
    """
    c = _blocking_counts(B, d, cap)
    x = _first_nonessential(c)
    if x is None:
        return Verdict(True)
    return Verdict(False, B.space.point(x))


def minimize(B: PointSet, d: int, cap: int = DEFAULT_CAP) -> PointSet:
    """Remove the smallest non-essential point until none is left.

    Deleting a point only lowers counts, and a tangent space at an essential
    point never contains another point of the set, so essential points stay
    essential.  A single ascending pass therefore reproduces the
    remove-the-smallest loop exactly.
    """
    c = _blocking_counts(B, d, cap)
    values = c.values.copy()
    kept = []
    for x in B.array().tolist():
        ids = c.cat.through(x)
        if np.any(values[ids] == 1):
            kept.append(x)
        else:
            values[ids] -= 1
    return PointSet.from_array(B.space, np.array(kept, dtype=np.int64))


def _valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def exponent_of(values: np.ndarray, p: int, cap_e: int) -> int:
    vals = {int(v) for v in np.unique(values)}
    e = cap_e
    for v in vals:
        if v == 1:
            continue
        if (v - 1) % p:
            return 0
        e = min(e, _valuation(v - 1, p))
    return e


def exponent(B: PointSet, d: int, p: int | None = None, cap: int = DEFAULT_CAP) -> int:
    """Largest ``e`` with every ``d``-space meeting ``B`` in 1 mod p^e points.

    When every count equals 1 the congruence holds for all ``e``; the value is
    then capped at the degree of the field over its prime field.
    """
    F = B.space.field
    if p is None:
        p = F.p
    c = _blocking_counts(B, d, cap)
    return exponent_of(c.values, p, F.prime_degree)


def spectrum(B: PointSet, d: int, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Intersection size -> number of ``d``-spaces with that size."""
    c = intersection_counts(B, d, cap)
    vals, cnt = np.unique(c.values, return_counts=True)
    return {int(v): int(n) for v, n in zip(vals, cnt)}


def is_small(size: int, space: PG, d: int) -> bool:
    return 2 * size < 3 * (space.q ** (space.dim - d) + 1)


def trivial_witness(B: PointSet, d: int, cap: int = DEFAULT_CAP) -> Subspace | None:
    """The first (N-d)-subspace contained in ``B``, or None."""
    space = B.space
    e = space.dim - d
    need = (space.q ** (e + 1) - 1) // (space.q - 1)
    if len(B) < need:
        return None
    if e == 0:
        return space.point(int(B.array()[0]))
    c = intersection_counts(B, e, cap)
    full = np.flatnonzero(c.values == need)
    if len(full) == 0:
        return None
    return c.cat.subspace(c.cat.first(full))


# ---------------------------------------------------------------------------
# report


@dataclass
class BlockingReport:
    space: PG
    d: int
    size: int
    blocking: Verdict
    minimal: Verdict
    small: bool
    trivial: Verdict
    redei: Verdict | None
    exponent: int
    spectrum: dict[int, int] = field(default_factory=dict)

    def lines(self) -> list[str]:
        from blockingsets.formats import format_subspace

        yn = lambda b: "yes" if b else "no"
        out = [
            f"BLOCKING {yn(self.blocking)}",
            f"MINIMAL {yn(self.minimal)}",
            f"SIZE {self.size}",
            f"SMALL {yn(self.small)}",
            f"TRIVIAL {yn(self.trivial)}",
            f"REDEI {'n/a' if self.redei is None else yn(self.redei)}",
            f"EXPONENT {self.exponent}",
            "SPECTRUM " + ",".join(f"{v}:{n}" for v, n in sorted(self.spectrum.items())),
        ]
        wit = [
            ("unblocked", None if self.blocking else self.blocking.witness),
            ("nonessential", None if self.minimal else self.minimal.witness),
            ("trivial", self.trivial.witness if self.trivial else None),
            ("redei", self.redei.witness if self.redei else None),
        ]
        for name, w in wit:
            if w is None:
                continue
            if isinstance(w, ProjPoint):
                w = Subspace(w.space, (w.coords,))
            out.append(f"WITNESS {name}")
            out.extend(format_subspace(w))
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def classify(B: PointSet, d: int, cap: int = DEFAULT_CAP) -> BlockingReport:
    """Fill every report field for ``B`` with respect to ``d``-subspaces."""
    space = B.space
    c = intersection_counts(B, d, cap)
    values = c.values
    skew = np.flatnonzero(values == 0)
    if len(skew):
        blocking = Verdict(False, c.cat.subspace(c.cat.first(skew)))
        minimal = Verdict(False)
    else:
        blocking = Verdict(True)
        x = _first_nonessential(c)
        minimal = Verdict(True) if x is None else Verdict(False, space.point(x))
    tw = trivial_witness(B, d, cap)
    redei = None
    if d == space.dim - 1:
        hit = np.flatnonzero(values == len(B) - space.q)
        redei = Verdict(True, c.cat.subspace(c.cat.first(hit))) if len(hit) else Verdict(False)
    vals, cnt = np.unique(values, return_counts=True)
    return BlockingReport(
        space=space,
        d=d,
        size=len(B),
        blocking=blocking,
        minimal=minimal,
        small=is_small(len(B), space, d),
        trivial=Verdict(tw is not None, tw),
        redei=redei,
        exponent=exponent_of(values, space.field.p, space.field.prime_degree),
        spectrum={int(v): int(n) for v, n in zip(vals, cnt)},
    )


def check_same_space(*sets: PointSet):
    spaces = {S.space for S in sets}
    if len(spaces) > 1:
        raise AmbientMismatch("point sets live in different spaces")
