import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from elemtilt.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_block_quiver_dot(capsys):
    code, out, _ = run(capsys, "quiver", "--p", "5", "--r", "4", "--format", "dot")
    assert code == 0
    edges = [line.strip() for line in out.splitlines() if "->" in line]
    assert len(edges) == 8
    assert '0 -> 1 [label="x"];' in edges and '1 -> 0 [label="y"];' in edges


@pytest.mark.parametrize("r", [2, 3, 5, 8])
def test_block_quiver_json_counts(capsys, r):
    code, out, _ = run(capsys, "quiver", "--p", "7", "--r", str(r), "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert set(obj) == {"p", "r", "i0", "vertices", "arrows"}
    assert obj["vertices"] == r
    assert sum(a["count"] for a in obj["arrows"]) == 2 * r


def test_r2_dot_has_parallel_edges(capsys):
    _, out, _ = run(capsys, "quiver", "--p", "3", "--r", "2", "--format", "dot")
    assert out.count("0 -> 1") == 2


@pytest.mark.parametrize("args", [
    ["quiver", "--p", "2", "--r", "3"],
    ["quiver", "--p", "3", "--r", "3"],
    ["tilt", "--p", "5", "--r", "4", "--i0", "0,1,2,3"],
    ["tilt", "--p", "5", "--r", "4", "--i0", "0,x"],
    ["tilt", "--p", "5", "--r", "4"],
    ["homdims", "--p", "5", "--r", "4", "--i0", "0,1,3", "--format", "dot"],
    ["tilt", "--p", "5"],
])
def test_invalid_input_exits_2(capsys, args):
    code, out, err = run(capsys, *args)
    assert code == 2 and out == ""


def test_tilt_worked_example(capsys):
    code, out, _ = run(capsys, "tilt", "--p", "5", "--r", "4", "--i0", "0,1,3")
    assert code == 0
    assert "T2: P1(+)P3 --(x;y)--> P2" in out.splitlines()
    assert "T0: P0 (stalk, degree 0)" in out


def test_tilt_json(capsys):
    _, out, _ = run(capsys, "tilt", "--p", "5", "--r", "4", "--i0", "0,1,3", "--format", "json")
    comps = json.loads(out)["components"]
    assert comps[2]["differential"] == ["x e_2", "y e_2"]
    assert [c["kind"] for c in comps] == ["stalk", "stalk", "two-term", "stalk"]


def test_homdims_golden(capsys):
    _, out, _ = run(capsys, "homdims", "--p", "5", "--r", "4", "--i0", "0,1,3", "--verbose")
    assert out == (GOLDEN / "homdims_5_4_013.txt").read_text()


def test_homdims_duality(capsys):
    _, a, _ = run(capsys, "homdims", "--p", "5", "--r", "7", "--i0", "0,1", "--format", "json")
    _, b, _ = run(capsys, "homdims", "--p", "5", "--r", "7", "--i0", "0,6", "--format", "json")
    A, B = json.loads(a)["dims"], json.loads(b)["dims"]
    r = 7
    assert all(A[i][j] == B[(-i) % r][(-j) % r] for i in range(r) for j in range(r))
    assert all(A[i][i] >= 1 for i in range(r))


def test_endo_quiver_worked_example(capsys):
    code, out, _ = run(capsys, "endo-quiver", "--p", "5", "--r", "4", "--i0", "0,1,3", "--format", "json")
    assert code == 0
    arrows = {(a["from"], a["to"]): a["count"] for a in json.loads(out)["arrows"]}
    assert arrows[(1, 2)] == 2 and arrows[(3, 2)] == 2 and arrows[(2, 1)] == 1


def test_exit_codes_for_verification(capsys):
    assert run(capsys, "check-tilting", "--p", "5", "--r", "4", "--i0", "0,1,3")[0] == 0
    assert run(capsys, "generation", "--p", "5", "--r", "4", "--i0", "0,1,3")[0] == 0
    assert run(capsys, "generation", "--p", "3", "--r", "4", "--i0", "0")[0] == 1
    assert run(capsys, "generation", "--p", "3", "--r", "4", "--i0", "0", "--extended")[0] == 0
    # the worked example carries null-homotopic C3 instances
    code, out, _ = run(capsys, "catalog", "verify", "--p", "5", "--r", "4", "--i0", "0,1,3", "--format", "json")
    rep = json.loads(out)
    assert code == 1 and not rep["passed"]
    bad = [v["id"] for v in rep["verdicts"] if not v["ok"]]
    assert bad and all(b.startswith("C3") for b in bad)
    assert run(capsys, "catalog", "verify", "--p", "3", "--r", "8", "--i0", "0")[0] == 0


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--p", "5", "--r", "4", "--i0", "0,1,3")
    assert code == 0
    assert "EpsilonU[arc=2,side=u]: f0[P1->P1] = x y; f0[P1->P3] = 4*x^2" in out


def test_out_is_written_atomically(capsys, tmp_path):
    target = tmp_path / "q.json"
    target.write_text("old")
    code = main(["quiver", "--p", "5", "--r", "4", "--format", "json", "--out", str(target)])
    assert code == 0 and capsys.readouterr().out == ""
    assert json.loads(target.read_text())["vertices"] == 4
    assert os.listdir(tmp_path) == ["q.json"]


@pytest.mark.parametrize("args", [
    ["endo-quiver", "--p", "5", "--r", "4", "--i0", "0,1,3", "--format", "dot"],
    ["homdims", "--p", "3", "--r", "5", "--i0", "0,2", "--format", "json", "--verbose"],
])
def test_byte_identical_across_processes(args):
    outs = [
        subprocess.run([sys.executable, "-m", "elemtilt", *args], capture_output=True, check=True).stdout
        for _ in range(2)
    ]
    assert outs[0] == outs[1] and outs[0]
