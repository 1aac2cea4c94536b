"""Slow reference implementations used as independent oracles.

None of these touch the catalog engine or the vectorized kernels: they work
from raw polynomial arithmetic or from explicit point-by-point scans.
"""

from __future__ import annotations

import itertools

from blockingsets.pg import enumerate_subspaces, points_of


def poly_mulmod(a, b, modulus, p):
    """Product of coefficient lists modulo a monic ``modulus`` over GF(p)."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    h = len(modulus) - 1
    for k in range(len(prod) - 1, h - 1, -1):
        c = prod[k]
        if c:
            for i in range(h + 1):
                prod[k - h + i] = (prod[k - h + i] - c * modulus[i]) % p
    out = prod[:h] + [0] * max(0, h - len(prod))
    return out


def code_to_poly(a, p, h):
    out = []
    for _ in range(h):
        a, r = divmod(a, p)
        out.append(r)
    return out


def poly_to_code(c, p):
    return sum(x * p**i for i, x in enumerate(c))


def has_root_or_factor(modulus, p):
    """Trial division by every monic polynomial of degree <= h/2."""
    h = len(modulus) - 1
    for d in range(1, h // 2 + 1):
        for coeffs in itertools.product(range(p), repeat=d):
            f = list(coeffs) + [1]
            r = list(modulus)
            while len(r) - 1 >= d and any(r):
                c = r[-1]
                shift = len(r) - 1 - d
                for i in range(d + 1):
                    r[shift + i] = (r[shift + i] - c * f[i]) % p
                r.pop()
            if not any(r):
                return True
    return False


def naive_counts(B, d):
    """Intersection size of ``B`` with every d-subspace, in enumeration order."""
    members = set(B.array().tolist())
    return [(S, len(set(points_of(S).array().tolist()) & members)) for S in enumerate_subspaces(B.space, d)]


def naive_is_blocking(B, d):
    for S, c in naive_counts(B, d):
        if c == 0:
            return False, S
    return True, None


def naive_tangent_count(B, P, d):
    members = set(B.array().tolist())
    n = 0
    for S in enumerate_subspaces(B.space, d):
        pts = set(points_of(S).array().tolist())
        if P.index in pts and pts & members == {P.index}:
            n += 1
    return n


def naive_is_minimal(B, d):
    ok, _ = naive_is_blocking(B, d)
    if not ok:
        return False
    return all(naive_tangent_count(B, P, d) > 0 for P in B)


def gf2_nullspace(M):
    """Basis of the right null space of a 0/1 matrix over GF(2)."""
    M = [list(r) for r in M]
    n = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(n):
        hit = next((i for i in range(r, len(M)) if M[i][c] % 2), None)
        if hit is None:
            continue
        M[r], M[hit] = M[hit], M[r]
        for i in range(len(M)):
            if i != r and M[i][c] % 2:
                M[i] = [(a + b) % 2 for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    basis = []
    for f in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[f] = 1
        for k, c in enumerate(pivots):
            v[c] = M[k][f] % 2
        basis.append(v)
    return basis
