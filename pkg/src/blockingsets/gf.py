"""Finite fields GF(p^h) and tower extensions GF(q^t) over GF(q).

Elements are integer codes.  For ``GF(p^h)`` with modulus ``f`` the code of
``c_0 + c_1 x + ... + c_{h-1} x^{h-1}`` is ``sum c_i p^i``.  For an extension
``GF(q^t)`` built over ``GF(q)`` the code of ``d_0 + d_1 a + ... `` (``d_i``
codes of the base field, ``a`` a root of the extension modulus) is
``sum d_i q^i``.  Both encodings are base-``p`` digit strings, so addition is
always digit-wise mod ``p`` (plain XOR in characteristic 2), and a base-field
element keeps its code when embedded in the extension.

Multiplication is table driven (exp/log over a primitive element) for orders up
to ``TABLE_CAP``; larger fields fall back to polynomial arithmetic.
"""

from __future__ import annotations

import functools
import math
from collections.abc import Sequence

import numpy as np

from blockingsets._moduli import DEFAULT_MODULI, MODULI_TABLE_VERSION
from blockingsets.errors import (
    DivisionByZero,
    InvalidCode,
    NonPrimeCharacteristic,
    ReducibleModulus,
    UnsupportedSize,
)

TABLE_CAP = 2**16
ADD_TABLE_CAP = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p^h``; raises ``NonPrimeCharacteristic`` if q is no prime power."""
    if q < 2:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    factors = prime_factors(q)
    if len(factors) != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    p = factors[0]
    h = round(math.log(q, p))
    while p**h < q:
        h += 1
    while p**h > q:
        h -= 1
    return p, h


# ---------------------------------------------------------------------------
# polynomials over a coefficient field given by scalar callables


class _PrimeOps:
    """Scalar arithmetic of GF(p) with the same method names as ``Field``."""

    def __init__(self, p):
        self.p = p
        self.order = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)


def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(a, f, F):
    a = _trim(a)
    f = _trim(f)
    lead_inv = F.inv(f[-1])
    while len(a) >= len(f):
        c = F.mul(a[-1], lead_inv)
        shift = len(a) - len(f)
        for i, fi in enumerate(f):
            if fi:
                a[shift + i] = F.sub(a[shift + i], F.mul(c, fi))
        a = _trim(a)
    return a


def _pmulmod(a, b, f, F):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return _pmod(out, f, F)


def _ppowmod(a, e, f, F):
    result = [1]
    base = _pmod(a, f, F)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, F)
        base = _pmulmod(base, base, f, F)
        e >>= 1
    return result


def _pgcd(a, b, F):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, F)
    return a


def _psub(a, b, F):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([F.sub(x, y) for x, y in zip(a, b)])


def _irreducible(f, F) -> bool:
    """Ben-Or test: ``f`` has no factor of degree ``i <= deg f / 2``."""
    deg = len(f) - 1
    if deg <= 1:
        return deg == 1
    x = [0, 1]
    power = x
    for _ in range(deg // 2):
        power = _ppowmod(power, F.order, f, F)
        g = _pgcd(f, _psub(power, x, F), F)
        if len(g) > 1:
            return False
    return True


def _primitive(f, F) -> bool:
    """True when ``x`` generates the multiplicative group of ``F[x]/(f)``."""
    deg = len(f) - 1
    if f[0] == 0:
        return False
    N = F.order**deg - 1
    x = [0, 1] if deg > 1 else [F.neg(f[0])]
    if _ppowmod(x, N, f, F) != [1]:
        return False
    return all(_ppowmod(x, N // r, f, F) != [1] for r in prime_factors(N))


def _conway_candidates(deg, F):
    """Monic polynomials of degree ``deg`` in Conway order.

    The key of ``x^deg + sum c_i x^i`` is the sequence ``(-1)^(deg-i) c_i`` for
    ``i = deg-1 .. 0`` compared lexicographically by element code.
    """
    q = F.order
    for idx in range(q**deg):
        digits = []
        for _ in range(deg):
            idx, r = divmod(idx, q)
            digits.append(r)
        seq = digits[::-1]
        coeffs = [0] * deg + [1]
        for pos, s in enumerate(seq):
            i = deg - 1 - pos
            coeffs[i] = s if (deg - i) % 2 == 0 else F.neg(s)
        yield coeffs


def least_primitive(deg: int, F) -> list[int]:
    """Least primitive monic polynomial of degree ``deg`` in Conway order."""
    for f in _conway_candidates(deg, F):
        if _primitive(f, F):
            return f
    raise ReducibleModulus(f"no primitive polynomial of degree {deg}")  # pragma: no cover


# ---------------------------------------------------------------------------
# fields


class Field:
    """Common arithmetic of ``FieldSpec`` and ``ExtensionSpec``.

    Subclasses supply ``p``, ``order``, ``prime_degree`` and ``_slow_mul``.
    """

    p: int
    order: int
    prime_degree: int

    def _setup(self):
        q = self.order
        self._digits = self.prime_degree
        if q <= TABLE_CAP:
            self._build_tables()
        else:
            self._exp = None
        if self.p != 2 and q <= ADD_TABLE_CAP:
            codes = np.arange(q)
            table = self._digit_add(codes[:, None], codes[None, :])
            self._add_np = table
            self._add_list = table.tolist()
        else:
            self._add_np = None
            self._add_list = None
        self._neg_list = [self._digit_neg(a) for a in range(q)] if q <= TABLE_CAP else None

    def _build_tables(self):
        q = self.order
        candidates = [self._natural_generator()] + list(range(2, q))
        for g in candidates:
            if g <= 0 or g >= q:
                continue
            exp = [1]
            x = g
            while x != 1 and len(exp) < q:
                exp.append(x)
                x = self._slow_mul(x, g)
            if len(exp) == q - 1:
                break
        else:  # q == 2
            exp = [1]
            g = 1
        self.generator = g
        log = [0] * q
        for k, v in enumerate(exp):
            log[v] = k
        self._exp = exp + exp
        self._log = log
        self._exp_np = np.array(self._exp, dtype=np.int64)
        self._log_np = np.array(log, dtype=np.int64)

    def _natural_generator(self) -> int:
        return self.p if self.prime_degree > 1 else 1

    # digit-wise additive structure -------------------------------------

    def _digit_add(self, a, b):
        p = self.p
        out = 0
        scale = 1
        for _ in range(self._digits):
            out = out + ((a % p + b % p) % p) * scale
            a = a // p
            b = b // p
            scale *= p
        return out

    def _digit_neg(self, a):
        p = self.p
        out, scale = 0, 1
        for _ in range(self._digits):
            out += (-(a % p) % p) * scale
            a //= p
            scale *= p
        return out

    # scalar API ----------------------------------------------------------

    def check(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.order:
            raise InvalidCode(f"{a!r} is not an element code of GF({self.order})")
        return int(a)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_list is not None:
            return self._add_list[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self._neg_list is not None:
            return self._neg_list[a]
        return self._digit_neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            return self._slow_mul(a, b)
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._exp is None:
            return self.pow(a, self.order - 2)
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def arith(self, a: int, b: int, kind: str) -> int:
        """Apply ``kind`` in {add, sub, mul, div, inv, pow}; ``b`` is ignored for inv."""
        a = self.check(a)
        if kind == "inv":
            return self.inv(a)
        if kind == "pow":
            if not isinstance(b, (int, np.integer)) or b < 0:
                raise InvalidCode(f"exponent {b!r} must be a nonnegative integer")
            return self.pow(a, int(b))
        b = self.check(b)
        if kind == "div" and b == 0:
            raise DivisionByZero("division by zero")
        try:
            op = {"add": self.add, "sub": self.sub, "mul": self.mul, "div": self.div}[kind]
        except KeyError:
            raise ValueError(f"unknown operation {kind!r}") from None
        return op(a, b)

    def elements(self) -> range:
        return range(self.order)

    def is_square(self) -> bool:
        return self.prime_degree % 2 == 0

    def sqrt_order(self) -> int:
        return math.isqrt(self.order)

    def subfield(self, order: int) -> list[int]:
        """Codes of the unique subfield with ``order`` elements."""
        return [a for a in self.elements() if self.pow(a, order) == a]

    # vectorized API --------------------------------------------------------

    def vadd(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.p == 2:
            return A ^ B
        if self._add_np is not None:
            return self._add_np[A, B]
        return self._digit_add(A, B)

    def vneg(self, A):
        A = np.asarray(A, dtype=np.int64)
        if self.p == 2:
            return A
        return self._digit_neg(A)

    def vmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self._exp is None:
            return np.frompyfunc(self.mul, 2, 1)(A, B).astype(np.int64)
        out = self._exp_np[self._log_np[A] + self._log_np[B]]
        return np.where((A == 0) | (B == 0), 0, out)

    def vinv(self, A):
        A = np.asarray(A, dtype=np.int64)
        if np.any(A == 0):
            raise DivisionByZero("inverse of zero")
        if self._exp is None:
            return np.frompyfunc(self.inv, 1, 1)(A).astype(np.int64)
        return self._exp_np[(self.order - 1 - self._log_np[A]) % (self.order - 1)]


class FieldSpec(Field):
    """``GF(p^h)`` defined by a monic irreducible modulus over ``GF(p)``."""

    def __init__(self, p: int, h: int, modulus: Sequence[int]):
        self.p = p
        self.h = h
        self.modulus = tuple(int(c) for c in modulus)
        self.order = p**h
        self.prime_degree = h
        self._prime = _PrimeOps(p)
        self._setup()

    def _natural_generator(self):
        if self.h == 1:
            return self._prime.neg(self.modulus[0]) or 1
        return self.p

    def to_poly(self, a: int) -> list[int]:
        out = []
        for _ in range(self.h):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_poly(self, coeffs) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(coeffs))

    def _slow_mul(self, a, b):
        prod = _pmulmod(self.to_poly(a), self.to_poly(b), list(self.modulus), self._prime)
        return self.from_poly(prod)

    def descriptor(self) -> str:
        return f"FIELD p={self.p} h={self.h} mod={','.join(map(str, self.modulus))}"

    def _key(self):
        return ("F", self.p, self.h, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec(GF({self.order}), mod={list(self.modulus)})"


class ExtensionSpec(Field):
    """``GF(q^t)`` in tower form over a base ``FieldSpec`` of order ``q``."""

    def __init__(self, base: FieldSpec, t: int, modulus: Sequence[int]):
        self.base = base
        self.t = t
        self.modulus = tuple(int(c) for c in modulus)
        self.p = base.p
        self.q = base.order
        self.order = base.order**t
        self.prime_degree = base.h * t
        self._setup()

    def _natural_generator(self):
        return self.q if self.t > 1 else self.base.neg(self.modulus[0]) or 1

    def coords(self, a: int) -> tuple[int, ...]:
        """Coordinates of ``a`` over the base field in the basis 1, a, .., a^(t-1)."""
        out = []
        for _ in range(self.t):
            a, r = divmod(a, self.q)
            out.append(r)
        return tuple(out)

    def from_coords(self, coords) -> int:
        return sum(int(c) * self.q**i for i, c in enumerate(coords))

    def _slow_mul(self, a, b):
        prod = _pmulmod(list(self.coords(a)), list(self.coords(b)), list(self.modulus), self.base)
        return self.from_coords(prod)

    def descriptor(self) -> str:
        return f"{self.base.descriptor()} EXT t={self.t} mod={','.join(map(str, self.modulus))}"

    def _key(self):
        return ("E", self.base._key(), self.t, self.modulus)

    def __eq__(self, other):
        return isinstance(other, ExtensionSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"ExtensionSpec(GF({self.q}^{self.t}), mod={list(self.modulus)})"


@functools.lru_cache(maxsize=None)
def _cached_field(p, h, modulus):
    return FieldSpec(p, h, modulus)


@functools.lru_cache(maxsize=None)
def _cached_extension(base, t, modulus):
    return ExtensionSpec(base, t, modulus)


def default_modulus(p: int, h: int) -> list[int]:
    """Modulus from the bundled table; computed by the same rule when absent."""
    if (p, h) in DEFAULT_MODULI:
        return list(DEFAULT_MODULI[(p, h)])
    if p**h > TABLE_CAP:
        raise UnsupportedSize(f"GF({p}^{h}) exceeds the default-modulus cap {TABLE_CAP}")
    return least_primitive(h, _PrimeOps(p))


def make_field(p: int, h: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated ``GF(p^h)``; the default modulus is deterministic per (p, h)."""
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if h < 1:
        raise ReducibleModulus(f"degree {h} must be at least 1")
    if modulus is None:
        modulus = default_modulus(p, h)
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != h + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus {list(modulus)} is not monic of degree {h}")
    if any(not 0 <= c < p for c in modulus):
        raise InvalidCode(f"modulus coefficients must lie in [0, {p})")
    if not _irreducible(list(modulus), _PrimeOps(p)):
        raise ReducibleModulus(f"modulus {list(modulus)} has a factor over GF({p})")
    return _cached_field(p, h, modulus)


def field_of_order(q: int) -> FieldSpec:
    p, h = prime_power(q)
    return make_field(p, h)


def make_extension(base: FieldSpec, t: int, modulus: Sequence[int] | None = None) -> ExtensionSpec:
    """Validated ``GF(q^t)`` over ``base``; default modulus is the least primitive one."""
    if t < 1:
        raise ReducibleModulus(f"extension degree {t} must be at least 1")
    if modulus is None:
        if base.order**t > TABLE_CAP:
            raise UnsupportedSize(f"GF({base.order}^{t}) exceeds the cap {TABLE_CAP}")
        modulus = _default_extension_modulus(base, t)
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != t + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"extension modulus {list(modulus)} is not monic of degree {t}")
    for c in modulus:
        base.check(c)
    if not _irreducible(list(modulus), base):
        raise ReducibleModulus(f"extension modulus {list(modulus)} is reducible over GF({base.order})")
    return _cached_extension(base, t, modulus)


@functools.lru_cache(maxsize=None)
def _default_extension_modulus(base, t):
    return tuple(least_primitive(t, base))


def embed(a: int, ext: ExtensionSpec) -> int:
    """Image of a base-field element in the extension (coordinates ``(a, 0, .., 0)``)."""
    return ext.base.check(a)


def expand_vector(v: Sequence[int], ext: ExtensionSpec) -> tuple[int, ...]:
    """Concatenate the base-field coordinates of every entry of ``v``."""
    out: list[int] = []
    for x in v:
        out.extend(ext.coords(ext.check(x)))
    return tuple(out)


def collapse_vector(w: Sequence[int], ext: ExtensionSpec) -> tuple[int, ...]:
    """Inverse of ``expand_vector``."""
    t = ext.t
    if len(w) % t:
        raise InvalidCode(f"length {len(w)} is not a multiple of t={t}")
    for x in w:
        ext.base.check(x)
    return tuple(ext.from_coords(w[i : i + t]) for i in range(0, len(w), t))


__all__ = [
    "MODULI_TABLE_VERSION",
    "ExtensionSpec",
    "Field",
    "FieldSpec",
    "collapse_vector",
    "default_modulus",
    "embed",
    "expand_vector",
    "field_of_order",
    "is_prime",
    "least_primitive",
    "make_extension",
    "make_field",
    "prime_power",
]
