"""End-to-end runs of the command line, in process where possible."""

import subprocess
import sys

import pytest

from flagmaps import isomorphic, medial_flag, parse_flg, serialize_flg, torus44
from flagmaps.cli import main
from flagmaps.formats import cube, octahedron, tetrahedron


def write_map(tmp_path, g, name="input.flg"):
    path = tmp_path / name
    path.write_text(serialize_flg(g), encoding="ascii")
    return str(path)


def test_validate_accepts_a_map(tmp_path, capsys):
    path = write_map(tmp_path, cube())
    assert main(["validate", path]) == 0
    assert capsys.readouterr().out == "ok: flg document, size 48\n"


def test_validate_reports_broken_documents(tmp_path, capsys):
    path = tmp_path / "broken.flg"
    path.write_text("flg 1\nn 4\ns0 0 1 2 3\ns1 1 0 3 2\ns2 2 3 0 1\n")
    assert main(["validate", str(path)]) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_validate_reports_missing_files(capsys):
    assert main(["validate", "/nonexistent/input.flg"]) == 1
    assert "cannot read" in capsys.readouterr().err


def test_analyze_medial_of_cube(tmp_path, capsys):
    path = write_map(tmp_path, medial_flag(cube()))
    assert main(["analyze", path]) == 0
    out = capsys.readouterr().out
    for line in ("flags: 96", "vertices: 12", "edges: 24", "faces: 14",
                 "euler: 2", "orientable: yes", "schlafli: none",
                 "automorphisms: 48", "orbits: 2", "alias: 2_01",
                 "self-dual: no", "medial: yes"):
        assert line in out, line


def test_analyze_twisted_torus(tmp_path, capsys):
    path = write_map(tmp_path, torus44(2, 1, -1, 2))
    assert main(["analyze", path]) == 0
    out = capsys.readouterr().out
    for line in ("flags: 40", "schlafli: {4,4}", "automorphisms: 20",
                 "self-dual: improper", "medial: no"):
        assert line in out, line


def test_transform_dual_to_file_and_medial_to_stdout(tmp_path, capsys):
    path = write_map(tmp_path, cube())
    out_path = tmp_path / "dual.flg"
    assert main(["transform", "--op", "dual", path,
                 "-o", str(out_path)]) == 0
    dual = parse_flg(out_path.read_text())
    assert isomorphic(dual, octahedron()) is not None

    assert main(["transform", "--op", "medial", path]) == 0
    text = capsys.readouterr().out
    assert parse_flg(text).s == medial_flag(cube()).s


def test_transform_demedialize_writes_two_maps(tmp_path):
    path = write_map(tmp_path, medial_flag(cube()))
    base = str(tmp_path / "half")
    assert main(["transform", "--op", "demedialize", path,
                 "-o", base]) == 0
    first = parse_flg((tmp_path / "half.a").read_text())
    second = parse_flg((tmp_path / "half.b").read_text())
    assert isomorphic(first, octahedron()) is not None
    assert isomorphic(second, cube()) is not None


def test_transform_demedialize_requires_output(tmp_path, capsys):
    path = write_map(tmp_path, medial_flag(cube()))
    assert main(["transform", "--op", "demedialize", path]) == 2
    assert "needs -o" in capsys.readouterr().err


def test_transform_demedialize_failure_is_an_error(tmp_path, capsys):
    path = write_map(tmp_path, tetrahedron())
    assert main(["transform", "--op", "demedialize", path,
                 "-o", str(tmp_path / "half")]) == 1
    assert "error:" in capsys.readouterr().err


def test_typegraph_stdout_and_dot_output(tmp_path, capsys):
    path = write_map(tmp_path, torus44(2, 1, -1, 2))
    assert main(["typegraph", path]) == 0
    assert capsys.readouterr().out.startswith("stg 1\nn 2\n")

    dot_path = tmp_path / "type.dot"
    assert main(["typegraph", path, "-o", str(dot_path)]) == 0
    assert dot_path.read_text().startswith("graph {")


def test_enumerate_records(capsys):
    assert main(["enumerate", "--k", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7
    assert all("polarities=" in line for line in lines)
    assert any("name=2_02" in line for line in lines)


def test_enumerate_table(capsys):
    assert main(["enumerate", "--k", "2", "--format", "table"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 8
    assert "name" in lines[0] and "code" in lines[0]


def test_enumerate_census_and_medial_blocks(capsys):
    assert main(["enumerate", "--k", "2", "--census", "--medial"]) == 0
    out = capsys.readouterr().out
    assert "duality counting mode: raw" in out
    assert "medial-types k=2 from-extended=6 union=7 closed-form=holds" in out
    assert sum(1 for line in out.splitlines()
               if line.startswith("medial-code: ")) == 7


def test_enumerate_dot_directory(tmp_path, capsys):
    out_dir = tmp_path / "dots"
    assert main(["enumerate", "--k", "2", "--format", "dot-dir",
                 "--out", str(out_dir)]) == 0
    assert "wrote 7 DOT files" in capsys.readouterr().out
    files = sorted(p.name for p in out_dir.iterdir())
    assert len(files) == 7
    assert "2_02.dot" in files

    assert main(["enumerate", "--k", "2", "--format", "dot-dir"]) == 2
    assert "--out" in capsys.readouterr().err


def test_enumerate_parallel_in_a_fresh_process():
    proc = subprocess.run(
        [sys.executable, "-m", "flagmaps.cli",
         "enumerate", "--k", "5", "--jobs", "2"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    assert len(proc.stdout.splitlines()) == 13


def test_selftest_at_small_depth(capsys):
    assert main(["selftest", "--max-k", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == "12/12 criteria passed"
    assert sum(1 for line in lines if line.startswith("PASS")) == 12


def test_usage_errors_exit_with_two():
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["transform", "--op", "frobnicate", "x.flg"])
    assert err.value.code == 2
