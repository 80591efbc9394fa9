import json
import subprocess
import sys

import pytest

from boxcentralizer.cli import main

S_BLOCKS = [
    {"top": [1, 2, 3], "bottom": [5]},
    {"top": [4, 5], "bottom": []},
    {"top": [], "bottom": [1, 2]},
    {"top": [], "bottom": [3, 4]},
]


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, json.loads(out.out), out.err


def test_sequence(capsys):
    status, doc, _ = run(capsys, "sequence", "--max-k", "7")
    assert status == 0
    assert doc == {"schema": "v1", "max_k": 7, "sequence": [2, 9, 29, 94, 275, 768, 2055]}


def test_dim_all_methods_agree_k2(capsys):
    status, doc, err = run(capsys, "dim", "--k", "2", "--n", "4")
    assert status == 0 and err == ""
    assert (doc["orbit"], doc["diagram"], doc["formula"], doc["agree"]) == (9, 9, 9, True)


def test_dim_k3_reports_disagreement(capsys):
    status, doc, err = run(capsys, "dim", "--k", "3")
    assert status == 0
    assert doc["n"] == 6
    assert (doc["orbit"], doc["diagram"], doc["formula"], doc["agree"]) == (31, 31, 29, False)
    assert "disagree" in err


def test_dim_single_method_and_small_n(capsys):
    status, doc, _ = run(capsys, "dim", "--k", "2", "--n", "3", "--method", "orbit")
    assert status == 0 and doc["orbit"] == 8 and doc["formula"] is None
    status, doc, _ = run(capsys, "dim", "--k", "2", "--n", "3", "--method", "formula")
    assert status == 1 and doc["error"]["type"] == "invalid_input"


def test_basis(capsys):
    status, doc, _ = run(capsys, "basis", "--k", "2", "--n", "4")
    assert status == 0
    assert doc["dimension"] == len(doc["basis"]) == 9
    assert doc["box_dimension"] == 10
    assert doc["basis"][0] == {
        "class": [[1, 0], [1, 0], [0, 1], [0, 1]],
        "representative": {"lambda": [2, 1], "mu": [4, 3]},
    }
    assert doc["basis"][-1]["representative"] == {"lambda": [1, 1], "mu": [1, 1]}


def test_expand_t(capsys):
    status, doc, _ = run(capsys, "expand-t", "--k", "2", "--n", "4", "--lambda", "2,1", "--mu", "1,1")
    assert status == 0
    assert doc["class"] == [[1, 2], [1, 0]]
    entries = doc["endomorphism"]["entries"]
    assert len(entries) == 12
    assert {"row": [1, 1], "col": [2, 1], "coeff": "1"} in entries


def test_expand_t_canonicalizes_part_order(capsys):
    _, a, _ = run(capsys, "expand-t", "--k", "2", "--n", "4", "--lambda", "1,2", "--mu", "1,1")
    _, b, _ = run(capsys, "expand-t", "--k", "2", "--n", "4", "--lambda", "2,1", "--mu", "1,1")
    assert a == b


def test_classes(capsys):
    status, doc, _ = run(capsys, "classes", "--k", "3")
    assert status == 0 and doc["count"] == len(doc["classes"]) == 31
    first = doc["classes"][0]
    assert set(first) == {"class", "top_sizes", "bottom_sizes"}


def test_phi_inline(capsys):
    status, doc, _ = run(capsys, "phi", "--k", "5", "--n", "10", "--blocks", json.dumps(S_BLOCKS))
    assert status == 0
    assert doc["m_matrix"] == [[1, 1, 1, 2, 2], [3, 3, 4, 4, 1]]
    assert doc["lambda"] == [2, 2, 1, 1, 1] and doc["mu"] == [4, 4, 3, 3, 1]
    assert doc["block_shape"] == [[3, 1], [2, 0], [0, 2], [0, 2]]


def test_phi_from_file(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"k": 5, "blocks": S_BLOCKS}))
    status, doc, _ = run(capsys, "phi", "--k", "5", "--n", "10", "--blocks", str(path))
    assert status == 0 and doc["m_matrix"][0] == [1, 1, 1, 2, 2]


def test_phi_requires_room(capsys):
    status, doc, _ = run(capsys, "phi", "--k", "5", "--n", "9", "--blocks", json.dumps(S_BLOCKS))
    assert status == 1 and doc["error"]["type"] == "invalid_input"


def test_verify(capsys):
    status, doc, _ = run(capsys, "verify", "--k", "2", "--n", "4", "--seed", "3")
    assert status == 0 and doc["ok"]
    assert "error" not in doc
    assert all(chk["ok"] for chk in doc["checks"])


def test_mult_json_and_representative(capsys):
    status, a, _ = run(capsys, "mult", "--k", "2", "--n", "4", "--left", "[[2,2]]", "--right", "2,1/1,1")
    assert status == 0
    assert a["product"] == [{"class": [[1, 2], [1, 0]], "coeff": 1}]
    _, b, _ = run(capsys, "mult", "--k", "2", "--n", "4", "--left", "1,1/1,1", "--right", "[[1,2],[1,0]]")
    assert a["product"] == b["product"]


def test_mult_bad_class(capsys):
    status, doc, _ = run(capsys, "mult", "--k", "2", "--n", "4", "--left", "nonsense", "--right", "[[2,2]]")
    assert status == 1 and doc["error"]["type"] == "invalid_input"


@pytest.mark.parametrize(
    "argv",
    [
        ["dim"],
        ["dim", "--k", "0"],
        ["basis", "--k", "2"],
        ["frobnicate"],
        ["dim", "--k", "2", "--method", "magic"],
    ],
)
def test_usage_errors(capsys, argv):
    status, doc, _ = run(capsys, *argv)
    assert status == 2
    assert doc["schema"] == "v1" and doc["error"]["type"] == "usage"


def test_out_of_range_partition(capsys):
    status, doc, _ = run(capsys, "expand-t", "--k", "2", "--n", "4", "--lambda", "5,1", "--mu", "1,1")
    assert status == 1 and doc["error"]["type"] == "invalid_input"


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    assert main(["--output", str(target), "sequence", "--max-k", "3"]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["sequence"] == [2, 9, 29]


def test_threads_flag_same_output(capsys):
    _, a, _ = run(capsys, "basis", "--k", "3", "--n", "5")
    _, b, _ = run(capsys, "--threads", "2", "basis", "--k", "3", "--n", "5")
    assert a == b


def test_subprocess_deterministic_bytes():
    cmd = [sys.executable, "-m", "boxcentralizer", "basis", "--k", "2", "--n", "4"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["dimension"] == 9
