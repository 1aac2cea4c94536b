from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockingsets.errors import InvalidCode, ReducibleModulus, ZeroVector
from blockingsets.formats import (
    FormatError,
    format_field,
    format_params,
    format_pointset,
    format_subspace_file,
    is_subspace_text,
    parse_field,
    parse_params,
    parse_pointset,
    parse_subspace_file,
)
from blockingsets.gf import field_of_order, make_extension
from blockingsets.pg import PG, PointSet, random_subspace


@pytest.mark.parametrize("q", [2, 4, 9, 27, 64])
def test_field_round_trip(q):
    F = field_of_order(q)
    assert parse_field(format_field(F)) == F


def test_extension_round_trip():
    E = make_extension(field_of_order(4), 2)
    assert parse_field(format_field(E)) == E
    assert format_field(E).split()[0] == "FIELD" and "EXT" in format_field(E)


def test_field_errors():
    with pytest.raises(FormatError):
        parse_field("GF p=2")
    with pytest.raises(FormatError):
        parse_field("FIELD h=2")
    with pytest.raises(ReducibleModulus):
        parse_field("FIELD p=2 h=2 mod=1,0,1")


@given(st.integers(0, 10**6), st.sampled_from([(2, 2), (2, 4), (3, 3), (2, 9)]))
def test_pointset_round_trip_byte_identical(seed, shape):
    dim, q = shape
    S = PG(dim, field_of_order(q))
    rng = np.random.default_rng(seed)
    B = PointSet.from_array(S, np.flatnonzero(rng.random(S.npoints) < 0.3))
    text = format_pointset(B)
    again = parse_pointset(text)
    assert again == B and format_pointset(again) == text


def test_pointset_over_extension():
    E = make_extension(field_of_order(2), 2)
    S = PG(2, E)
    B = PointSet.of(S, [0, 3, 7])
    assert parse_pointset(format_pointset(B)) == B


def test_pointset_normalizes_and_skips_comments():
    text = "# a comment\nPG m=2 FIELD p=3 h=1\n0,2,1\n\n# tail\n2,0,0\n"
    B = parse_pointset(text)
    assert sorted(P.coords for P in B) == [(0, 1, 2), (1, 0, 0)]


def test_pointset_errors():
    with pytest.raises(FormatError):
        parse_pointset("")
    with pytest.raises(FormatError):
        parse_pointset("PG m=2 FIELD p=3\n1,0\n")
    with pytest.raises(InvalidCode):
        parse_pointset("PG m=2 FIELD p=3\n1,0,5\n")
    with pytest.raises(ZeroVector):
        parse_pointset("PG m=2 FIELD p=3\n0,0,0\n")
    with pytest.raises(FormatError):
        parse_pointset("XX m=2 FIELD p=3\n")


def test_subspace_file_round_trip():
    S = PG(4, field_of_order(3))
    U = random_subspace(S, 2, np.random.default_rng(1))
    text = format_subspace_file(U)
    assert is_subspace_text(text)
    assert parse_subspace_file(text) == U
    assert not is_subspace_text(format_pointset(PointSet.of(S, [1, 2])))


def test_subspace_rank_mismatch():
    with pytest.raises(ZeroVector):
        parse_subspace_file("PG m=2 FIELD p=2\nSUBSPACE rank=2\n1,0,0\n1,0,0\n")
    with pytest.raises(FormatError):
        parse_subspace_file("PG m=2 FIELD p=2\nSUBSPACE rank=2\n1,0,0\n")


def test_params_round_trip():
    S = PG(5, field_of_order(2))
    U = random_subspace(S, 1, np.random.default_rng(0))
    text = format_params({"n": 3, "t": 2, "q": 2, "seed": 9}, {"omega": U})
    pf = parse_params(text)
    assert pf.params == {"n": "3", "t": "2", "q": "2", "seed": "9"}
    assert pf.frame("omega", S) == U and pf.frame("gamma", S) is None


def test_params_errors():
    with pytest.raises(FormatError):
        parse_params("FRAME x\n")
    with pytest.raises(FormatError):
        parse_params("justtext\n")
