from __future__ import annotations

import pytest

from blockingsets.cli import RunConfig, run
from blockingsets.formats import format_pointset, parse_pointset, parse_subspace_file
from blockingsets.gf import field_of_order, make_extension
from blockingsets.pg import PG, PointSet, Subspace, points_of


def _line_file(tmp_path, q=9):
    S = PG(2, field_of_order(q))
    L = PointSet.of(S, points_of(Subspace(S, ((1, 0, 0), (0, 1, 0)))))
    p = tmp_path / "lineset.pts"
    p.write_text(format_pointset(L))
    return p


def test_verify_line(tmp_path, capsys):
    p = _line_file(tmp_path)
    assert run(["verify", "--k", "1", "--in", str(p)]) == 0
    out = capsys.readouterr().out
    for line in ("BLOCKING yes", "MINIMAL yes", "TRIVIAL yes", "SIZE 10", "SPECTRUM 1:90,10:1"):
        assert line in out.splitlines()
    assert "# subcommand=verify" in out and "# seed=0" in out


def test_construct_mps(tmp_path, capsys):
    out_file = tmp_path / "mps.pts"
    code = run(["construct", "mps", "--n", "3", "--t", "2", "--q", "3", "--seed", "7", "--base", "triangle", "--out", str(out_file)])
    assert code == 0
    out = capsys.readouterr().out
    assert "MINIMAL yes" in out.splitlines() and "INFO variant=A" in out
    B = parse_pointset(out_file.read_text())
    assert B.space.q == 9 and format_pointset(B) == out_file.read_text()


def test_construct_deterministic(capsys):
    argv = ["construct", "c1", "--n", "3", "--t", "2", "--q", "4", "--k", "2", "--base", "baer", "--seed", "3", "--jobs", "1"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first


def test_construct_c1_hermitian_rejected(capsys):
    assert run(["construct", "c1", "--n", "3", "--t", "2", "--q", "4", "--k", "2", "--base", "hermitian"]) == 2
    assert "TangentConditionFailed" in capsys.readouterr().err


def test_construct_linear_scattered(capsys):
    assert run(["construct", "linear", "--n", "3", "--t", "2", "--q", "4", "--k", "2", "--scattered"]) == 0
    out = capsys.readouterr().out
    assert "SIZE 21" in out.splitlines() and "SMALL yes" in out.splitlines()


def test_construct_base_and_cone(capsys):
    assert run(["construct", "base", "--q", "3", "--base", "triangle"]) == 0
    assert "SIZE 6" in capsys.readouterr().out.splitlines()
    assert run(["construct", "cone", "--q", "3", "--m", "3", "--s", "0", "--base", "triangle"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "SIZE 19" in out and "MINIMAL yes" in out


def test_construct_params_file_frames(tmp_path, capsys):
    first = tmp_path / "first.txt"
    assert run(["construct", "c1", "--n", "3", "--t", "2", "--q", "4", "--k", "2", "--base", "baer", "--seed", "5"]) == 0
    out = capsys.readouterr().out.splitlines()
    i = out.index("FRAME omega")
    j = i
    while j < len(out) and (out[j][:1].isdigit() or out[j].startswith(("FRAME", "SUBSPACE"))):
        j += 1
    frames = out[i:j]
    params = tmp_path / "c1.params"
    params.write_text("n=3\nt=2\nq=4\nk=2\nbase=baer\n" + "\n".join(frames) + "\n")
    assert run(["construct", "c1", "--params", str(params), "--out", str(first)]) == 0
    again = capsys.readouterr().out.splitlines()
    assert [ln for ln in again if ln.startswith("FRAME") or ln.startswith("SIZE")] == [
        ln for ln in out if ln.startswith("FRAME") or ln.startswith("SIZE")
    ]


def test_scattered_not_found_exhaustive(capsys):
    assert run(["scattered", "--dim", "3", "--n", "3", "--t", "2", "--q", "2"]) == 2
    assert "NotFound exhaustive=yes" in capsys.readouterr().err


def test_scattered_found(tmp_path, capsys):
    out = tmp_path / "s.sub"
    assert run(["scattered", "--dim", "1", "--n", "2", "--t", "2", "--q", "3", "--out", str(out)]) == 0
    assert parse_subspace_file(out.read_text()).dim == 1


def test_count_and_bases(capsys):
    assert run(["count", "--m", "5", "--d", "3", "--q", "2"]) == 0
    assert "COUNT 651" in capsys.readouterr().out
    assert run(["bases", "--kind", "hermitian", "--q", "4"]) == 0
    out = capsys.readouterr().out
    assert "SIZE 9" in out and "TANGENTS 1:9" in out


def test_reduce_and_collapse_round_trip(tmp_path, capsys):
    E = make_extension(field_of_order(2), 2)
    S = PG(2, E)
    L = PointSet.of(S, points_of(Subspace(S, ((1, 0, 0), (0, 1, 0)))))
    big = tmp_path / "big.pts"
    big.write_text(format_pointset(L))
    small = tmp_path / "small.pts"
    assert run(["reduce", "--in", str(big), "--out", str(small)]) == 0
    assert "SIZE 15" in capsys.readouterr().out
    back = tmp_path / "back.pts"
    assert run(["collapse", "--in", str(small), "--t", "2", "--out", str(back)]) == 0
    assert parse_pointset(back.read_text()) == L


def test_decompose_cli(tmp_path, capsys):
    E = make_extension(field_of_order(2), 2)
    S = PG(2, E)
    L = PointSet.of(S, points_of(Subspace(S, ((1, 0, 0), (0, 1, 0)))))
    big = tmp_path / "big.pts"
    big.write_text(format_pointset(L))
    assert run(["decompose", "--in", str(big)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "COVER 15" in out and "IMAGE equal" in out


@pytest.mark.parametrize(
    "argv,code",
    [
        (["count", "--m", "2", "--d", "1", "--q", "6"], 64),
        (["frobnicate"], 64),
        ([], 64),
        (["verify", "--in", "/nonexistent/x.pts"], 74),
        (["verify", "--in", "/nonexistent/x.pts", "--jobs", "0"], 64),
        (["construct", "c2", "--n", "3", "--t", "3", "--q", "2", "--k", "2"], 2),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert run(argv) == code


def test_too_large(tmp_path, capsys):
    p = _line_file(tmp_path, q=9)
    assert run(["verify", "--k", "1", "--cap", "10", "--in", str(p)]) == 3


def test_bad_file_format(tmp_path, capsys):
    p = tmp_path / "bad.pts"
    p.write_text("not a header\n")
    assert run(["verify", "--in", str(p)]) == 2


def test_run_config_header():
    cfg = RunConfig("verify", seed=4, values={"d": 1})
    assert cfg.header() == ["# subcommand=verify", "# d=1", "# seed=4", "# budget=200", "# jobs=1", f"# cap={cfg.cap}"]
