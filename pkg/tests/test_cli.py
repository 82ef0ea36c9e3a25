import json

import pytest

from kappa_lab import fixtures
from kappa_lab.cli import main
from kappa_lab.graph import serialize_graph


@pytest.fixture
def banana_file(tmp_path):
    path = tmp_path / "banana.json"
    path.write_text(serialize_graph(fixtures.double_banana(1)), encoding="utf-8")
    return str(path)


def write_graph(tmp_path, g, name="g.json"):
    path = tmp_path / name
    path.write_text(serialize_graph(g), encoding="utf-8")
    return str(path)


def test_validate_ok(banana_file, capsys):
    assert main(["validate", "--input", banana_file]) == 0
    assert capsys.readouterr().out == "valid\n"


def test_validate_bad_graph_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"vertices": 2, "edges": [[1, 2]], "pins": [1, 2]}), encoding="utf-8")
    assert main(["validate", "--input", path.as_posix()]) == 2
    assert "PinsNotIndependent" in capsys.readouterr().out


def test_validate_malformed_exit_2(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{oops", encoding="utf-8")
    assert main(["validate", "--input", path.as_posix()]) == 2


def test_kappa_banana(banana_file, capsys):
    assert main(["kappa", "--input", banana_file]) == 0
    assert capsys.readouterr().out == "4\n"


def test_kappa_structured(banana_file, capsys):
    assert main(["kappa", "--input", banana_file, "--format", "structured"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kappa"] == 4 and doc["succeeded"] is True


def test_kappa_invalid_input_exit_2(tmp_path, capsys):
    path = tmp_path / "loop.json"
    path.write_text(json.dumps({"vertices": 1, "edges": [[1, 1]]}), encoding="utf-8")
    assert main(["kappa", "--input", path.as_posix()]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file_exit_1(capsys):
    assert main(["kappa", "--input", "/nonexistent/g.json"]) == 1
    assert "internal error" in capsys.readouterr().err


def test_order_command(tmp_path, capsys):
    path = write_graph(tmp_path, fixtures.chain_graph(3, {1}))
    assert main(["order", "--input", path, "--format", "structured"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["order"] == [1, 2, 3] and doc["back_degrees"] == [1, 1]


def test_certify_structured(tmp_path, capsys):
    path = write_graph(tmp_path, fixtures.toy_graph())
    assert main(["certify", "--input", path, "--format", "structured"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kappa"] == 4
    assert sum(s["epsilon"] for s in doc["steps"]) == 11
    assert [t["d"] for t in doc["thresholds"]] == [2, 3, 4]


def test_certify_text_plan(tmp_path, capsys):
    path = write_graph(tmp_path, fixtures.complete_graph(3))
    assert main(["certify", "--input", path]) == 0
    out = capsys.readouterr().out
    assert "plan header" in out and "certified budget k = 2" in out


def test_threshold_table(capsys):
    assert main(["threshold", "--k", "2", "--dims", "3,4"]) == 0
    assert capsys.readouterr().out == "d=3: 5/2\nd=4: 3\n"


def test_threshold_invalid_dim_annotated(capsys):
    assert main(["threshold", "--k", "3", "--dims", "2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("d=2: 5/2") and "no nontrivial result" in out


def test_threshold_structured_exact(capsys):
    assert main(["threshold", "--k", "1", "--dims", "3", "--format", "structured"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["thresholds"][0] == {"d": 3, "value_num": 12, "value_den": 7, "valid": True}


def test_split_components(tmp_path, capsys):
    from kappa_lab.graph import PinnedGraph

    g = PinnedGraph(n=6, edges=((1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)),
                    pins=frozenset({1, 4}))
    path = write_graph(tmp_path, g)
    assert main(["split", "--input", path, "--format", "structured"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["components"]) == 2 and doc["kappa"] == 2


def test_split_cycle(tmp_path, capsys):
    path = write_graph(tmp_path, fixtures.cycle_graph(9, {1, 5}))
    assert main(["split", "--input", path, "--cycle-at", "1,5"]) == 0
    out = capsys.readouterr().out
    assert "4 edges" in out and "5 edges" in out


def test_sample_to_file(tmp_path):
    out = tmp_path / "cloud.txt"
    rc = main(["sample", "--generator", "uniform-cube", "--dim", "2", "--n", "10",
               "--seed", "3", "--output", out.as_posix()])
    assert rc == 0
    lines = out.read_text(encoding="utf-8").strip().splitlines()
    assert lines[0].startswith("#") and len(lines) == 11


def test_volume_structured(tmp_path, capsys):
    path = write_graph(tmp_path, fixtures.eight_cycle_four_pins())
    rc = main(["volume", "--graph", path, "--generator", "uniform-cube", "--dim", "2",
               "--n", "2000", "--delta", "0.125", "--seed", "1", "--format", "structured"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["K"] == 8 and doc["N"] >= 1 and doc["seed"] == 1


def test_structured_runs_byte_identical(banana_file, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for out in (out1, out2):
        assert main(["certify", "--input", banana_file, "--format", "structured",
                     "--output", out.as_posix()]) == 0
    assert out1.read_bytes() == out2.read_bytes()
