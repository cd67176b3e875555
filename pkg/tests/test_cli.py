import json
import subprocess
import sys

import pytest

from nakct.cli import run


@pytest.fixture()
def files(tmp_path):
    paths = {}

    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        paths[name] = str(path)

    write("a9r2.json", {"kind": "acyclic", "homogeneous": {"m": 9, "l": 2}})
    write("a73.json", {"kind": "acyclic", "kupisch": [1, 2, 3, 3, 3, 3, 3]})
    write("lamA.json", {"kind": "acyclic", "kupisch": [1, 2, 3, 3, 4, 2, 3]})
    write(
        "lamC.json",
        {"kind": "cyclic", "kupisch": [2, 2, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2]},
    )
    write(
        "marked.json",
        {
            "members": [
                [1, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 5], [5, 6],
                [6, 7], [7, 8], [8, 9], [9, 9],
            ]
        },
    )
    write("big.json", {"kind": "cyclic", "homogeneous": {"m": 10, "l": 8}})
    write("bad.json", {"kind": "acyclic", "kupisch": [1, 1]})
    return paths


def _run(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_command(files, capsys):
    code, out, _ = _run(capsys, ["classify", "--n", "4", files["a9r2.json"]])
    assert code == 0
    payload = json.loads(out)
    assert payload["exists"] is True
    assert payload["case"] == "AcyclicHomogRadSq"
    assert len(payload["subcategories"]) == 1
    assert [1, 1] in payload["subcategories"][0]
    assert payload["pieces"] == [[1, 5, 2], [5, 9, 2]]


def test_classify_negative_exit(files, capsys):
    code, out, _ = _run(capsys, ["classify", "--n", "3", files["lamA.json"]])
    assert code == 1
    assert json.loads(out)["exists"] is False


def test_verify_negative_perp_gap(files, capsys):
    code, out, _ = _run(
        capsys,
        ["verify", "--n", "2", "--mode", "n", "--subcat", files["marked.json"], files["a9r2.json"]],
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["verdict"] is False
    gaps = [f for f in payload["failures"] if f["kind"] == "PerpGap"]
    assert {"kind": "PerpGap", "module": [3, 3], "side": "both"} in gaps


def test_verify_positive(files, capsys):
    code, out, _ = _run(
        capsys,
        ["verify", "--n", "4", "--subcat", files["marked.json"], files["a9r2.json"]],
    )
    assert code == 0 and json.loads(out)["verdict"] is True


def test_enumerate_command(files, capsys):
    code, out, _ = _run(capsys, ["enumerate", "--n", "4", files["a73.json"]])
    assert code == 0
    assert len(json.loads(out)["subcategories"]) == 1


def test_ext_command(files, capsys):
    code, out, _ = _run(
        capsys, ["ext", "--x", "3,4", "--y", "2,3", "--k", "1", files["lamA.json"]]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ext"] == [{"dim": 1, "k": 1}]


def test_singularity_command(files, capsys):
    code, out, _ = _run(capsys, ["singularity", "--n", "4", files["lamC.json"]])
    assert code == 0
    payload = json.loads(out)
    assert payload["gamma"] == {"kind": "cyclic", "kupisch": [2] * 12}
    assert payload["distinguished"] == [1, 7, 11]
    assert payload["gamma_indices"] == [3, 7, 11]
    assert payload["count"] == 4
    assert payload["gorenstein_witness"] == [6, 7]
    assert len(payload["f"]["objects"]) == 24
    assert [8, 9] in payload["f"]["f_projectives"]


def test_glue_and_self_glue_and_gldim(files, capsys, tmp_path):
    code, out, _ = _run(capsys, ["glue", files["a73.json"], files["a9r2.json"]])
    assert code == 0
    glued = json.loads(out)
    assert glued["kupisch"] == [1, 2, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2]
    glued_path = tmp_path / "glued.json"
    glued_path.write_text(json.dumps(glued), encoding="utf-8")

    code, out, _ = _run(capsys, ["gldim", str(glued_path)])
    assert code == 0 and json.loads(out) == {"gldim": 12}

    code, out, _ = _run(capsys, ["self-glue", str(glued_path)])
    assert code == 0
    assert json.loads(out)["kupisch"] == [2, 2, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2]

    code, out, _ = _run(capsys, ["gldim", files["lamC.json"]])
    assert code == 0 and json.loads(out) == {"gldim": "infinity"}


def test_ar_quiver_dot_counts(files, capsys):
    code, out, _ = _run(capsys, ["ar-quiver", "--render", "dot", files["lamA.json"]])
    assert code == 0
    nodes = [line for line in out.splitlines() if "[label=" in line]
    edges = [line for line in out.splitlines() if "->" in line]
    # 18 indecomposables; the arrow rule yields 22 irreducible maps
    assert len(nodes) == 18
    assert len(edges) == 22


def test_ar_quiver_json(files, capsys):
    code, out, _ = _run(capsys, ["ar-quiver", files["lamA.json"]])
    payload = json.loads(out)
    assert len(payload["nodes"]) == 18
    assert [[2, 4], [2, 5], "mono"] in payload["edges"]


def test_render_formats(files, capsys):
    for fmt in ("dot", "tikz", "ascii"):
        code, out, _ = _run(capsys, ["ar-quiver", "--render", fmt, files["a73.json"]])
        assert code == 0 and out
        code, out, _ = _run(
            capsys, ["resolution-quiver", "--render", fmt, files["lamC.json"]]
        )
        assert code == 0 and out


def test_highlight_render(files, capsys):
    code, out, _ = _run(
        capsys,
        ["ar-quiver", "--render", "ascii", "--highlight", files["marked.json"], files["a9r2.json"]],
    )
    assert code == 0
    assert "[5,5]" in out and "(6,6)" in out


def test_resolution_quiver_json(files, capsys):
    code, out, _ = _run(capsys, ["resolution-quiver", files["lamC.json"]])
    payload = json.loads(out)
    assert payload["successor"]["1"] == 13


def test_input_error_exit_codes(files, capsys):
    code, _, err = _run(capsys, ["gldim", files["bad.json"]])
    assert code == 2
    assert json.loads(err)["error"] == "InvalidKupisch"
    code, _, err = _run(capsys, ["gldim", "/nonexistent/file.json"])
    assert code == 2


def test_capacity_exit_code(files, capsys, monkeypatch):
    monkeypatch.delenv("NAKCT_MAX_GROUND_SET", raising=False)
    code, _, err = _run(capsys, ["enumerate", "--n", "2", files["big.json"]])
    assert code == 3
    assert json.loads(err)["error"] == "GroundSetTooLarge"
    monkeypatch.setenv("NAKCT_MAX_GROUND_SET", "80")
    code, out, _ = _run(capsys, ["enumerate", "--n", "2", files["big.json"]])
    assert code == 0


def test_determinism_across_processes(files):
    argv = [sys.executable, "-m", "nakct.cli", "classify", "--n", "4", files["lamC.json"]]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.endswith("\n") and "\r" not in first.stdout


def test_determinism_in_process(files, capsys):
    commands = [
        ["classify", "--n", "4", files["a9r2.json"]],
        ["enumerate", "--n", "4", files["a73.json"]],
        ["ar-quiver", "--render", "dot", files["lamA.json"]],
        ["singularity", "--n", "4", files["lamC.json"]],
        ["resolution-quiver", files["lamC.json"]],
    ]
    for argv in commands:
        _, first, _ = _run(capsys, argv)
        _, second, _ = _run(capsys, argv)
        assert first == second
