import json

import pytest

from ksmooth import classifiers
from ksmooth.classifiers import SmoothnessPartition
from ksmooth.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


THIRD_IDENTITY = {"domain": "linf3", "codomain": "l1:3",
                  "matrix": [["1/3", "0", "0"], ["0", "1/3", "0"], ["0", "0", "1/3"]]}


def test_point_examples(capsys):
    code, out, _ = run(capsys, "point", "--space", "linf3", "--x", "1,1,0")
    assert code == 0 and "order: 2" in out
    code, out, _ = run(capsys, "point", "--space", "l1:3", "--x", "1/3,1/3,1/3", "--json")
    assert code == 0 and json.loads(out)["order"] == 1
    code, _, err = run(capsys, "point", "--space", "linf3", "--x", "1,1,2")
    assert code == 2 and "not unit norm" in err and "norm=2" in err


def test_point_usage_errors(capsys):
    assert run(capsys, "point", "--space", "linf3")[0] == 2
    assert run(capsys, "point", "--space", "linf3", "--x", "1.0,1,0")[0] == 2
    assert run(capsys, "point", "--space", "nowhere", "--x", "1")[0] == 2
    assert run(capsys, "point", "--x", "1,1,0")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "point", "--json", "--markdown", "--space", "linf3", "--x", "1,1,0")[0] == 2


def test_point_space_file(tmp_path, capsys):
    f = write(tmp_path, "hex.json", {"kind": "polygon", "vertices": [[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]]})
    code, out, _ = run(capsys, "point", "--file", f, "--x", "1,1")
    assert code == 0 and "order: 2" in out


def test_operator_command(tmp_path, capsys):
    f = write(tmp_path, "identity_third.json", THIRD_IDENTITY)
    code, out, _ = run(capsys, "operator", "--file", f)
    assert code == 0 and "order: 4" in out
    code, out, _ = run(capsys, "operator", "--file", f, "--json")
    d = json.loads(out)
    assert d["order"] == 4 and d["opNorm"] == "1" and len(d["normingExtremes"]) == 8


def test_operator_file_errors(tmp_path, capsys):
    assert run(capsys, "operator", "--file", str(tmp_path / "none.json"))[0] == 2
    bad = write(tmp_path, "bad.json", {**THIRD_IDENTITY, "matrix": [["0", "0", "0"]] * 3})
    code, _, err = run(capsys, "operator", "--file", bad)
    assert code == 2 and "zero operator" in err


def test_classify_command(tmp_path, capsys):
    f = write(tmp_path, "op.json", THIRD_IDENTITY)
    code, out, _ = run(capsys, "classify", "--file", f)
    assert code == 0 and "predicted: 4" in out and "agree: yes" in out
    # a hypothesis violation is an input problem
    g = write(tmp_path, "g.json", {**THIRD_IDENTITY, "matrix": [["1/3", "1/3", "1/3"], ["0", "0", "0"], ["0", "0", "0"]]})
    assert run(capsys, "classify", "--file", g)[0] == 2


def test_classify_disagreement_exits_one(tmp_path, capsys):
    f = write(tmp_path, "op.json", {"domain": "linf3", "codomain": "linf2", "matrix": [["1/12", "0", "5/12"], ["1", "0", "0"]]})
    code, out, _ = run(capsys, "classify", "--file", f, "--json")
    d = json.loads(out)
    assert code == 1 and d["predicted"] == 4 and d["computed"] == 3 and not d["agree"]


def test_classify_infeasible_exits_one(tmp_path, capsys, monkeypatch):
    real = classifiers.partition

    def fake(t):
        p = real(t)
        v = p.vertices
        return SmoothnessPartition(p.operator, v[:1] + v[-1:], v[1:2] + v[-2:-1], v[2:6], p.support)

    monkeypatch.setattr(classifiers, "partition", fake)
    f = write(tmp_path, "op.json", THIRD_IDENTITY)
    code, out, err = run(capsys, "classify", "--file", f)
    assert code == 1 and "infeasible" in err and "predicted: infeasible" in out


def test_verify_face_theorem(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "face-theorem", "--space", "linf3", "--samples", "3")
    assert code == 0 and "failures: 0" in out


def test_verify_classifier_deterministic(capsys, monkeypatch):
    argv = ["verify", "--suite", "classifier", "--count", "6", "--seed", "2", "--json"]
    first = run(capsys, *argv)
    monkeypatch.setenv("KSMOOTH_WORKERS", "2")
    second = run(capsys, *argv)
    assert first[0] == second[0] == 0
    assert first[1] == second[1]


def test_verify_classifier_config_file(tmp_path, capsys):
    f = write(tmp_path, "c.json", {"domain": "linf3", "codomain": "hexagon", "count": 4, "seed": 0})
    code, out, _ = run(capsys, "verify", "--suite", "classifier", "--file", f, "--markdown")
    # operator #3 of this campaign has both image extreme points on one hexagon edge
    assert code == 1 and "| rule | k | operators | verified |" in out
    assert "predicted 4, computed 3, oracle 3" in out


def test_verify_bad_workers(capsys, monkeypatch):
    monkeypatch.setenv("KSMOOTH_WORKERS", "lots")
    assert run(capsys, "verify", "--suite", "classifier", "--count", "1")[0] == 2
    assert run(capsys, "verify", "--suite", "polar", "--workers", "0")[0] == 2


@pytest.mark.parametrize("suite", ["polar", "vertex-enumeration", "cube-faces", "segment-pairs", "oracle"])
def test_verify_other_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--count", "4", "--json")
    assert code == 0 and json.loads(out)["passed"]


def test_polar_and_faces(capsys):
    code, out, _ = run(capsys, "polar", "--space", "hexagon", "--json")
    d = json.loads(out)
    assert code == 0 and len(d["polar"]["vertices"]) == 6
    code, out, _ = run(capsys, "faces", "--space", "linf3")
    assert code == 0 and "proper faces: 26" in out
