"""Command line front end.

Every run prints a report whose header lines (``# key=value``) record the fully
resolved configuration, including default moduli, so that the run can be
repeated exactly.  Exit status: 0 success, 2 hypothesis or input failure,
3 instance too large, 64 usage error, 70 internal consistency failure,
74 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from blockingsets import blocking, construct
from blockingsets.errors import (
    GeometryError,
    InstanceTooLarge,
    NotFound,
    UnsupportedSize,
    ValidatorError,
)
from blockingsets.formats import (
    FormatError,
    ParamFile,
    format_pointset,
    format_subspace,
    format_subspace_file,
    is_subspace_text,
    parse_params,
    parse_pointset,
    parse_subspace_file,
)
from blockingsets.gf import field_of_order, make_extension, prime_power
from blockingsets.pg import DEFAULT_CAP, PG, PointSet, from_local, gaussian_count
from blockingsets.spread import SpreadContext, b_map, field_reduce, find_scattered, spread_cover

EXIT_OK = 0
EXIT_VALIDATOR = 2
EXIT_TOO_LARGE = 3
EXIT_USAGE = 64
EXIT_SOFTWARE = 70
EXIT_IO = 74


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    subcommand: str
    seed: int = 0
    budget: int = 200
    jobs: int = 1
    cap: int = DEFAULT_CAP
    values: dict = field(default_factory=dict)

    def header(self) -> list[str]:
        lines = [f"# subcommand={self.subcommand}"]
        for k, v in self.values.items():
            lines.append(f"# {k}={v}")
        lines += [f"# seed={self.seed}", f"# budget={self.budget}", f"# jobs={self.jobs}", f"# cap={self.cap}"]
        return lines


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"{text} must be at least 1")
    return v


def _prime_power(text: str) -> int:
    q = int(text)
    try:
        prime_power(q)
    except GeometryError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    return q


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=_positive, default=200)
    common.add_argument("--jobs", type=_positive, default=1)
    common.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    common.add_argument("--out", type=Path)

    p = _Parser(prog="blockingsets", description="Blocking sets via field reduction and cones.")
    sub = p.add_subparsers(dest="subcommand", parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="build a blocking set")
    c.add_argument("kind", choices=["base", "cone", "linear", "c1", "c2", "mps"])
    c.add_argument("--n", type=_positive, default=3)
    c.add_argument("--t", type=_positive, default=2)
    c.add_argument("--q", type=_prime_power, default=2)
    c.add_argument("--k", type=_positive, default=None, help="blocked (k-1)-spaces of the big space")
    c.add_argument("--base", default="line", help="planar base kind or a point-set file of PG(2,q)")
    c.add_argument("--params", type=Path, help="construction parameter file")
    c.add_argument("--variant", choices=["A", "B"], default="A")
    c.add_argument("--extra-points", type=int, default=0)
    c.add_argument("--bypass", action="store_true", help="skip the tangent validator")
    c.add_argument("--scattered", action="store_true", help="linear: use a scattered subspace")
    c.add_argument("--m", type=_positive, default=3, help="cone: ambient projective dimension")
    c.add_argument("--s", type=int, default=0, help="cone: vertex dimension")

    v = sub.add_parser("verify", parents=[common], help="classify a point set")
    v.add_argument("--in", dest="inp", type=Path, required=True)
    v.add_argument("--k", type=int, default=None, help="dimension of the blocked subspaces (default hyperplanes)")

    d = sub.add_parser("decompose", parents=[common], help="write a minimal hyperplane blocker as an image")
    d.add_argument("--in", dest="inp", type=Path, required=True)

    r = sub.add_parser("reduce", parents=[common], help="field-reduce a big point set or subspace")
    r.add_argument("--in", dest="inp", type=Path, required=True)

    co = sub.add_parser("collapse", parents=[common], help="map a small point set to the big space")
    co.add_argument("--in", dest="inp", type=Path, required=True)
    co.add_argument("--t", type=_positive, required=True)
    co.add_argument("--ext-mod", default=None, help="comma separated extension modulus")

    s = sub.add_parser("scattered", parents=[common], help="search a scattered subspace")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--t", type=_positive, required=True)
    s.add_argument("--q", type=_prime_power, required=True)
    s.add_argument("--threshold", type=int, default=200_000)

    b = sub.add_parser("bases", parents=[common], help="emit a planar base")
    b.add_argument("--kind", choices=list(construct.BASE_KINDS), required=True)
    b.add_argument("--q", type=_prime_power, required=True)

    n = sub.add_parser("count", parents=[common], help="number of subspaces of PG(m,q)")
    n.add_argument("--m", type=int, required=True)
    n.add_argument("--d", type=int, required=True)
    n.add_argument("--q", type=_prime_power, required=True)
    return p


# ---------------------------------------------------------------------------
# helpers


def _emit(cfg: RunConfig, lines: list[str], out=None):
    out = out or sys.stdout
    out.write("\n".join(cfg.header() + lines) + "\n")


def _write(path: Path | None, text: str):
    if path is not None:
        path.write_text(text)


def _context(n: int, t: int, q: int) -> SpreadContext:
    return SpreadContext(n, make_extension(field_of_order(q), t))


def _base(spec: str, F) -> PointSet:
    if spec in construct.BASE_KINDS:
        return construct.planar_base(spec, F)
    B = parse_pointset(Path(spec).read_text())
    if B.space != PG(2, F):
        raise FormatError(f"base file lives in {B.space}, expected PG(2,{F.order})")
    return B


def _info_lines(info: dict) -> list[str]:
    return [f"INFO {k}={v}" for k, v in info.items()]


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(a, cfg: RunConfig) -> int:
    pf = parse_params(a.params.read_text()) if a.params else ParamFile()
    P = pf.params
    n = int(P.get("n", a.n))
    t = int(P.get("t", a.t))
    q = int(P.get("q", a.q))
    k = int(P.get("k", a.k if a.k is not None else n - 1))
    cfg.seed = int(P.get("seed", cfg.seed))
    cfg.budget = int(P.get("budget", cfg.budget))
    base_spec = P.get("base", a.base)
    variant = P.get("variant", a.variant)
    rng = np.random.default_rng(cfg.seed)
    Fq = field_of_order(q)
    cfg.values.update(kind=a.kind, base=base_spec)

    if a.kind == "base":
        B = _base(base_spec, Fq)
        cfg.values.update(q=q, field=Fq.descriptor())
        rep = blocking.classify(B, 1, cfg.cap)
        _write(a.out, format_pointset(B))
        _emit(cfg, rep.lines())
        return EXIT_OK

    if a.kind == "cone":
        base = _base(base_spec, Fq)
        space = PG(a.m, Fq)
        spec = construct.random_cone_spec(space, a.s, base, rng)
        K = construct.cone(spec)
        cfg.values.update(m=a.m, s=a.s, q=q, field=Fq.descriptor())
        rep = blocking.classify(K, 1, cfg.cap)
        _write(a.out, format_pointset(K))
        _emit(cfg, ["VERTEX"] + format_subspace(spec.vertex) + ["SCREEN"] + format_subspace(spec.screen) + rep.lines())
        return EXIT_OK

    ctx = _context(n, t, q)
    cfg.values.update(n=n, t=t, q=q, k=k, field=ctx.ext.descriptor())
    frames: dict = {}
    if a.kind == "linear":
        dim = n * t - k * t
        if a.scattered:
            found = find_scattered(dim, ctx, budget=cfg.budget, seed=cfg.seed)
            if not found.found:
                raise NotFound(f"no scattered {dim}-space found", found.exhaustive)
            pi = found.subspace
        else:
            pi = pf.frame("pi", ctx.small)
            if pi is None:
                from blockingsets.pg import random_subspace

                pi = random_subspace(ctx.small, dim, rng)
        B = construct.linear_bs(pi, ctx, k)
        frames["pi"] = pi
        info = {"size": len(B)}
    elif a.kind == "c1":
        base = _base(base_spec, Fq)
        omega, gamma = pf.frame("omega", ctx.small), pf.frame("gamma", ctx.small)
        if omega is None or gamma is None:
            omega, gamma = construct.search_construction_1_frame(ctx, k, rng, cfg.budget)
        res = construct.construction_1(ctx, k, omega, gamma, base, bypass=a.bypass)
        B, info = res.points, res.info
        frames.update(omega=omega, gamma=gamma)
    elif a.kind == "c2":
        base = _base(base_spec, Fq)
        names = ("nu", "pi", "omega", "gamma")
        given = {nm: pf.frame(nm, ctx.small) for nm in names}
        if all(given[nm] is not None for nm in names):
            placed = from_local(given["gamma"], base)
            spec = construct.Construction2Spec(ctx, k, given["nu"], given["pi"], given["omega"], given["gamma"], placed)
        else:
            spec = construct.search_construction_2_frame(ctx, k, base, rng, cfg.budget)
        res = construct.construction_2(spec)
        B, info = res.points, res.info
        frames.update(nu=spec.nu, pi=spec.pi, omega=spec.omega, gamma=spec.gamma)
    elif a.kind == "mps":
        base = _base(base_spec, Fq)
        spec = construct.search_mps_frame(ctx, base, rng, cfg.budget, extra_points=a.extra_points, variant=variant)
        res = construct.construction_mps(spec)
        B, info = res.points, res.info
        frames.update(sigma=spec.sigma, sigma_p=spec.sigma_p, Y=spec.Y, omega=spec.omega, gamma_p=spec.gamma_p)
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(a.kind)

    rep = blocking.classify(B, k - 1, cfg.cap)
    lines = _info_lines(info)
    for name, S in frames.items():
        lines.append(f"FRAME {name}")
        lines.extend(format_subspace(S))
    _write(a.out, format_pointset(B))
    _emit(cfg, lines + rep.lines())
    return EXIT_OK


def cmd_verify(a, cfg: RunConfig) -> int:
    B = parse_pointset(a.inp.read_text())
    d = a.k if a.k is not None else B.space.dim - 1
    cfg.values.update(input=a.inp, space=f"PG({B.space.dim},{B.space.q})", field=B.space.field.descriptor(), d=d)
    rep = blocking.classify(B, d, cfg.cap)
    _emit(cfg, rep.lines())
    return EXIT_OK


def _ctx_of(space: PG) -> SpreadContext:
    F = space.field
    if not hasattr(F, "base"):
        raise FormatError("input must live over an extension field (EXT header)")
    return SpreadContext(space.n, F)


def cmd_decompose(a, cfg: RunConfig) -> int:
    B = parse_pointset(a.inp.read_text())
    ctx = _ctx_of(B.space)
    cfg.values.update(input=a.inp, n=ctx.n, t=ctx.t, q=ctx.q, field=ctx.ext.descriptor())
    dec = construct.decompose(B, ctx, cfg.cap)
    _write(a.out, format_pointset(dec.reduced))
    _emit(cfg, [f"COVER {len(dec.cover)}", f"REDUCED {len(dec.reduced)}", "IMAGE equal", "MINIMAL yes"])
    return EXIT_OK


def cmd_reduce(a, cfg: RunConfig) -> int:
    text = a.inp.read_text()
    if is_subspace_text(text):
        S = parse_subspace_file(text)
        ctx = _ctx_of(S.space)
        D = field_reduce(S, ctx)
        out = format_subspace_file(D.subspace)
        summary = [f"RANK {D.subspace.rank}"]
    else:
        B = parse_pointset(text)
        ctx = _ctx_of(B.space)
        cover = spread_cover(B, ctx)
        out = format_pointset(cover)
        summary = [f"SIZE {len(cover)}"]
    cfg.values.update(input=a.inp, field=ctx.ext.descriptor())
    _write(a.out, out)
    _emit(cfg, summary)
    if a.out is None:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_collapse(a, cfg: RunConfig) -> int:
    U = parse_pointset(a.inp.read_text())
    F = U.space.field
    if U.space.n % a.t:
        raise FormatError(f"vector length {U.space.n} is not a multiple of t={a.t}")
    mod = [int(x) for x in a.ext_mod.split(",")] if a.ext_mod else None
    ctx = SpreadContext(U.space.n // a.t, make_extension(F, a.t, mod))
    B = b_map(U, ctx)
    cfg.values.update(input=a.inp, field=ctx.ext.descriptor())
    out = format_pointset(B)
    _write(a.out, out)
    _emit(cfg, [f"SIZE {len(B)}"])
    if a.out is None:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_scattered(a, cfg: RunConfig) -> int:
    ctx = _context(a.n, a.t, a.q)
    cfg.values.update(dim=a.dim, n=a.n, t=a.t, q=a.q, field=ctx.ext.descriptor(), threshold=a.threshold)
    res = find_scattered(a.dim, ctx, budget=cfg.budget, seed=cfg.seed, exhaustive_threshold=a.threshold)
    if not res.found:
        raise NotFound(f"no scattered {a.dim}-space found", res.exhaustive)
    _write(a.out, format_subspace_file(res.subspace))
    _emit(cfg, [f"FOUND restarts={res.restarts} exhaustive={'yes' if res.exhaustive else 'no'}"] + format_subspace(res.subspace))
    return EXIT_OK


def cmd_bases(a, cfg: RunConfig) -> int:
    F = field_of_order(a.q)
    B = construct.planar_base(a.kind, F)
    cfg.values.update(kind=a.kind, q=a.q, field=F.descriptor())
    tc = blocking.tangent_counts(B, 1)
    out = format_pointset(B)
    _write(a.out, out)
    _emit(cfg, [f"SIZE {len(B)}", "TANGENTS " + ",".join(f"{v}:{n}" for v, n in sorted(_hist(tc.values()).items()))])
    if a.out is None:
        sys.stdout.write(out)
    return EXIT_OK


def _hist(values) -> dict[int, int]:
    out: dict[int, int] = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return out


def cmd_count(a, cfg: RunConfig) -> int:
    prime_power(a.q)
    if not -1 <= a.d <= a.m:
        raise UsageError(f"need -1 <= d <= m, got d={a.d}, m={a.m}")
    cfg.values.update(m=a.m, d=a.d, q=a.q)
    _emit(cfg, [f"COUNT {gaussian_count(a.m + 1, a.d + 1, a.q)}"])
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "decompose": cmd_decompose,
    "reduce": cmd_reduce,
    "collapse": cmd_collapse,
    "scattered": cmd_scattered,
    "bases": cmd_bases,
    "count": cmd_count,
}


def run(argv: list[str] | None = None) -> int:
    """Run one subcommand and return its exit status."""
    try:
        a = build_parser().parse_args(argv)
        if a.subcommand is None:
            raise UsageError("a subcommand is required")
        cfg = RunConfig(a.subcommand, seed=a.seed, budget=a.budget, jobs=a.jobs, cap=a.cap)
        return COMMANDS[a.subcommand](a, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotFound as exc:
        print(f"error: NotFound exhaustive={'yes' if exc.exhaustive else 'no'}: {exc}", file=sys.stderr)
        return EXIT_VALIDATOR
    except (ValidatorError, FormatError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATOR
    except (InstanceTooLarge, UnsupportedSize) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except GeometryError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOFTWARE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
