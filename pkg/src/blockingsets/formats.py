"""Line-oriented text formats for fields, point sets, subspaces and parameters.

Point-set file::

    PG m=2 FIELD p=2 h=2 mod=1,1,1
    0,0,1
    0,1,0
    ...

``m`` is the projective dimension.  An extension ambient appends
``EXT t=<t> mod=<coeffs>`` to the header.  Data lines are comma separated
decimal element codes of the normalized vector, sorted by point index.
Subspaces are written as ``SUBSPACE rank=<r>`` followed by ``r`` basis rows.
Lines starting with ``#`` are comments everywhere.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from blockingsets.errors import InvalidCode, ZeroVector
from blockingsets.gf import Field, make_extension, make_field
from blockingsets.pg import PG, PointSet, Subspace, normalize, subspace_from_rows


class FormatError(ValueError):
    """Malformed input text."""


def _kv(tokens: Iterable[str]) -> dict[str, str]:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise FormatError(f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        out[k] = v
    return out


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")] if text else []
    except ValueError as exc:
        raise FormatError(f"bad integer list {text!r}") from exc


def format_field(F: Field) -> str:
    return F.descriptor()


def parse_field(text: str) -> Field:
    """Inverse of ``format_field``: ``FIELD p= h= mod= [EXT t= mod=]``."""
    toks = text.split()
    if not toks or toks[0] != "FIELD":
        raise FormatError(f"field descriptor must start with FIELD: {text!r}")
    if "EXT" in toks:
        cut = toks.index("EXT")
        base_kv, ext_kv = _kv(toks[1:cut]), _kv(toks[cut + 1 :])
    else:
        base_kv, ext_kv = _kv(toks[1:]), None
    try:
        F = make_field(int(base_kv["p"]), int(base_kv.get("h", 1)), _ints(base_kv["mod"]) if "mod" in base_kv else None)
        if ext_kv is not None:
            F = make_extension(F, int(ext_kv["t"]), _ints(ext_kv["mod"]) if "mod" in ext_kv else None)
    except KeyError as exc:
        raise FormatError(f"missing field parameter {exc}") from exc
    return F


def format_header(space: PG) -> str:
    return f"PG m={space.dim} {format_field(space.field)}"


def parse_header(line: str) -> PG:
    toks = line.split()
    if len(toks) < 2 or toks[0] != "PG" or not toks[1].startswith("m="):
        raise FormatError(f"bad header {line!r}")
    return PG(int(toks[1][2:]), parse_field(" ".join(toks[2:])))


def _content(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def parse_vector(line: str, space: PG) -> list[int]:
    v = _ints(line.replace(" ", ""))
    if len(v) != space.n:
        raise FormatError(f"expected {space.n} coordinates, got {len(v)}")
    for x in v:
        if not 0 <= x < space.q:
            raise InvalidCode(f"code {x} outside GF({space.q})")
    return v


def format_pointset(B: PointSet) -> str:
    lines = [format_header(B.space)]
    lines.extend(",".join(map(str, P.coords)) for P in B)
    return "\n".join(lines) + "\n"


def parse_pointset(text: str) -> PointSet:
    lines = _content(text)
    if not lines:
        raise FormatError("empty point-set file")
    space = parse_header(lines[0])
    pts = [normalize(parse_vector(ln, space), space) for ln in lines[1:]]
    return PointSet.of(space, pts)


def format_subspace(S: Subspace) -> list[str]:
    return [f"SUBSPACE rank={S.rank}"] + [",".join(map(str, row)) for row in S.basis]


def parse_subspace_lines(lines: list[str], space: PG) -> tuple[Subspace, int]:
    """Parse a SUBSPACE block at the start of ``lines``; returns it and lines used."""
    head = lines[0].split()
    if head[0] != "SUBSPACE" or len(head) != 2 or not head[1].startswith("rank="):
        raise FormatError(f"bad subspace header {lines[0]!r}")
    r = int(head[1][5:])
    if len(lines) < r + 1:
        raise FormatError("truncated subspace block")
    rows = [parse_vector(ln, space) for ln in lines[1 : r + 1]]
    S = subspace_from_rows(space, rows)
    if S.rank != r:
        raise ZeroVector(f"basis rows have rank {S.rank}, expected {r}")
    return S, r + 1


def format_subspace_file(S: Subspace) -> str:
    return "\n".join([format_header(S.space)] + format_subspace(S)) + "\n"


def parse_subspace_file(text: str) -> Subspace:
    lines = _content(text)
    if len(lines) < 2:
        raise FormatError("subspace file needs a header and a SUBSPACE block")
    space = parse_header(lines[0])
    S, _ = parse_subspace_lines(lines[1:], space)
    return S


def is_subspace_text(text: str) -> bool:
    lines = _content(text)
    return len(lines) > 1 and lines[1].startswith("SUBSPACE")


@dataclass
class ParamFile:
    """``key=value`` lines plus named frames (``FRAME name`` then a subspace block)."""

    params: dict[str, str] = field(default_factory=dict)
    frames: dict[str, list[str]] = field(default_factory=dict)

    def frame(self, name: str, space: PG) -> Subspace | None:
        if name not in self.frames:
            return None
        S, _ = parse_subspace_lines(self.frames[name], space)
        return S


def parse_params(text: str) -> ParamFile:
    out = ParamFile()
    lines = _content(text)
    i = 0
    while i < len(lines):
        ln = lines[i]
        if ln.startswith("FRAME"):
            parts = ln.split()
            if len(parts) != 2 or i + 1 >= len(lines):
                raise FormatError(f"bad frame line {ln!r}")
            head = lines[i + 1].split()
            r = int(head[1][5:]) if len(head) == 2 and head[1].startswith("rank=") else -1
            if r < 0:
                raise FormatError(f"frame {parts[1]} lacks a SUBSPACE block")
            out.frames[parts[1]] = lines[i + 1 : i + 2 + r]
            i += 2 + r
            continue
        k, sep, v = ln.partition("=")
        if not sep:
            raise FormatError(f"expected key=value, got {ln!r}")
        out.params[k.strip()] = v.strip()
        i += 1
    return out


def format_params(params: dict[str, object], frames: dict[str, Subspace] | None = None) -> str:
    lines = [f"{k}={v}" for k, v in params.items()]
    for name, S in (frames or {}).items():
        lines.append(f"FRAME {name}")
        lines.extend(format_subspace(S))
    return "\n".join(lines) + "\n"
