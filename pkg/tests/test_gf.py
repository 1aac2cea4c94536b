from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockingsets.errors import DivisionByZero, InvalidCode, NonPrimeCharacteristic, ReducibleModulus, UnsupportedSize
from blockingsets.gf import (
    MODULI_TABLE_VERSION,
    collapse_vector,
    default_modulus,
    embed,
    expand_vector,
    field_of_order,
    make_extension,
    make_field,
)

from oracles import code_to_poly, has_root_or_factor, poly_mulmod, poly_to_code

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 16]
ALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256]


def test_prime_field():
    F = make_field(2, 1)
    assert F.order == 2 and F.mul(1, 1) == 1 and F.add(1, 1) == 0


def test_gf4_modulus_and_products():
    F = make_field(2, 2, [1, 1, 1])
    assert F.mul(2, 2) == 3
    assert F.pow(2, 3) == 1
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 0, 1])


def test_non_prime_rejected():
    with pytest.raises(NonPrimeCharacteristic):
        make_field(4, 1)


def test_unsupported_size_without_modulus():
    with pytest.raises(UnsupportedSize):
        make_field(2, 17)


def test_explicit_large_modulus_uses_polynomial_arithmetic():
    # x^17 + x^3 + 1 is irreducible over GF(2)
    mod = [1, 0, 0, 1] + [0] * 13 + [1]
    F = make_field(2, 17, mod)
    rng = random.Random(1)
    for _ in range(50):
        a, b = rng.randrange(1, F.order), rng.randrange(1, F.order)
        expect = poly_to_code(poly_mulmod(code_to_poly(a, 2, 17), code_to_poly(b, 2, 17), mod, 2), 2)
        assert F.mul(a, b) == expect
        assert F.mul(a, F.inv(a)) == 1


def test_division_by_zero():
    F = field_of_order(9)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(DivisionByZero):
        F.div(3, 0)


def test_invalid_code():
    F = field_of_order(4)
    with pytest.raises(InvalidCode):
        F.arith(4, 1, "mul")
    with pytest.raises(InvalidCode):
        F.arith(1, -1, "pow")


@pytest.mark.parametrize("q", ALL_ORDERS)
def test_default_moduli_irreducible_and_deterministic(q):
    F = field_of_order(q)
    if F.h > 1:
        assert not has_root_or_factor(list(F.modulus), F.p)
    assert default_modulus(F.p, F.h) == list(F.modulus)
    assert MODULI_TABLE_VERSION == 1


@pytest.mark.parametrize("q", ALL_ORDERS)
def test_multiplication_matches_polynomial_oracle(q):
    F = field_of_order(q)
    rng = random.Random(q)
    pairs = itertools.product(range(q), repeat=2) if q <= 16 else [(rng.randrange(q), rng.randrange(q)) for _ in range(2000)]
    for a, b in pairs:
        expect = poly_to_code(poly_mulmod(code_to_poly(a, F.p, F.h), code_to_poly(b, F.p, F.h), list(F.modulus), F.p), F.p)
        assert F.mul(a, b) == expect


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    for a, b, c in itertools.product(range(q), repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a, b in itertools.product(range(q), repeat=2):
        assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", [25, 27, 32, 49, 64, 81, 125, 128, 243, 256])
def test_field_axioms_sampled(q):
    F = field_of_order(q)
    rng = random.Random(7 * q)
    for _ in range(20000):
        a, b, c = rng.randrange(q), rng.randrange(q), rng.randrange(q)
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))


@pytest.mark.parametrize("q", ALL_ORDERS)
def test_frobenius_additive(q):
    F = field_of_order(q)
    p = F.p
    for a in range(q):
        for b in range(0, q, max(1, q // 16)):
            assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))


def test_arith_dispatch():
    F = field_of_order(9)
    for kind, fn in [("add", F.add), ("sub", F.sub), ("mul", F.mul)]:
        assert F.arith(5, 7, kind) == fn(5, 7)
    assert F.arith(5, 7, "div") == F.mul(5, F.inv(7))
    assert F.arith(5, 0, "inv") == F.inv(5)
    assert F.arith(5, 4, "pow") == F.mul(F.mul(5, 5), F.mul(5, 5))


@given(st.sampled_from(SMALL_ORDERS + [256]), st.data())
def test_pow_square_and_multiply(q, data):
    F = field_of_order(q)
    a = data.draw(st.integers(0, q - 1))
    e = data.draw(st.integers(0, 600))
    acc = 1
    for _ in range(e):
        acc = F.mul(acc, a)
    assert F.pow(a, e) == acc


def test_embed_units_and_coordinates():
    E = make_extension(field_of_order(3), 2)
    assert embed(0, E) == 0 and embed(1, E) == 1
    assert E.coords(embed(2, E)) == (2, 0)


@pytest.mark.parametrize("q,t", [(2, 2), (2, 3), (2, 4), (3, 2), (4, 2), (4, 3), (4, 4), (2, 8), (16, 2), (3, 4)])
def test_embed_homomorphism_and_image(q, t):
    base = field_of_order(q)
    E = make_extension(base, t)
    for a, b in itertools.product(range(q), repeat=2):
        assert embed(base.mul(a, b), E) == E.mul(embed(a, E), embed(b, E))
        assert embed(base.add(a, b), E) == E.add(embed(a, E), embed(b, E))
    image = {embed(a, E) for a in range(q)}
    assert len(image) == q
    if E.order <= 256:
        fixed = {x for x in range(E.order) if E.pow(x, q) == x}
        assert fixed == image


def test_extension_default_moduli():
    assert make_extension(field_of_order(4), 2).modulus == (2, 1, 1)
    assert make_extension(field_of_order(2), 2).modulus == (1, 1, 1)


def test_extension_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        make_extension(field_of_order(4), 2, [0, 0, 1])


def test_expand_examples():
    E = make_extension(field_of_order(2), 2)
    assert expand_vector((0, 0), E) == (0, 0, 0, 0)
    assert expand_vector((2,), E) == (0, 1)


def test_expand_collapse_round_trip_exhaustive():
    E = make_extension(field_of_order(2), 2)
    for v in itertools.product(range(4), repeat=2):
        assert collapse_vector(expand_vector(v, E), E) == v
    for w in itertools.product(range(2), repeat=4):
        assert expand_vector(collapse_vector(w, E), E) == w


def test_collapse_rejects_bad_length():
    E = make_extension(field_of_order(2), 2)
    with pytest.raises(InvalidCode):
        collapse_vector((0, 1, 0), E)


@given(st.sampled_from([(2, 2), (3, 2), (4, 2), (2, 4)]), st.data())
def test_expand_is_linear_over_base(qt, data):
    q, t = qt
    base = field_of_order(q)
    E = make_extension(base, t)
    n = data.draw(st.integers(1, 3))
    v = data.draw(st.lists(st.integers(0, E.order - 1), min_size=n, max_size=n))
    w = data.draw(st.lists(st.integers(0, E.order - 1), min_size=n, max_size=n))
    lam = data.draw(st.integers(0, q - 1))
    s = [E.add(E.mul(embed(lam, E), x), y) for x, y in zip(v, w)]
    ev, ew = expand_vector(v, E), expand_vector(w, E)
    assert expand_vector(s, E) == tuple(base.add(base.mul(lam, a), b) for a, b in zip(ev, ew))
