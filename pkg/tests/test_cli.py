import json

import pytest

from linrel.cli import main
from linrel.document import serialize
from linrel import relation as rel
from linrel import subspace as sub


@pytest.fixture
def t0_file(tmp_path):
    path = tmp_path / "t0.json"
    assert main(["example", "t0", "-o", str(path)]) == 0
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_example_stdout(capsys):
    code, out, _ = run(capsys, ["example", "identity"])
    assert code == 0
    assert json.loads(out)["dim_h"] == 2


def test_example_complex(capsys):
    code, out, _ = run(capsys, ["example", "t0", "--field", "complex"])
    assert code == 0 and json.loads(out)["field"] == "complex"


def test_info(capsys, t0_file):
    code, out, _ = run(capsys, ["info", t0_file, "--report", "json"])
    info = json.loads(out)
    assert code == 0
    assert (info["dom"], info["ran"], info["ker"], info["mul"]) == (1, 2, 0, 1)
    assert info["is_operator"] is False and info["is_selfadjoint"] is True
    code, out, _ = run(capsys, ["info", t0_file])
    assert "mul: 1" in out


def test_adjoint(capsys, t0_file, tmp_path):
    out_path = tmp_path / "adj.json"
    assert main(["adjoint", t0_file, "-o", str(out_path)]) == 0
    doc = json.loads(out_path.read_text())
    assert doc["label"] == "t0*" and len(doc["generators"]) == 2


def test_regpart(capsys, t0_file, tmp_path):
    code, out, _ = run(capsys, ["regpart", t0_file])
    d = json.loads(out)
    assert code == 0 and len(d["regular"]["generators"]) == 1
    prefix = str(tmp_path / "parts")
    assert main(["regpart", t0_file, "-o", prefix]) == 0
    assert json.loads(open(prefix + ".sing.json").read())["label"] == "t0_sing"


def test_stone(capsys, t0_file):
    code, out, _ = run(capsys, ["stone", t0_file])
    assert code == 0
    assert "E11 =" in out and "[PASS] stone.blocks" in out and "n/a" in out
    code, out, _ = run(capsys, ["stone", t0_file, "--report", "json"])
    d = json.loads(out)
    assert len(d["E_T"]) == 4 and all(c["passed"] for c in d["checks"])


def test_verify(capsys, t0_file):
    code, out, _ = run(capsys, ["verify", t0_file])
    assert code == 0 and "overall: PASS" in out
    code, out, _ = run(capsys, ["verify", t0_file, "--report", "json"])
    assert json.loads(out)["passed"] is True


def test_verify_fails_with_impossible_tolerance(capsys, t0_file):
    code, out, _ = run(capsys, ["verify", t0_file, "--tol", "-1"])
    assert code == 1 and "FAIL" in out


def test_fuzz(capsys):
    code, out, _ = run(capsys, ["fuzz", "--trials", "12", "--max-dim", "4", "--field", "both"])
    assert code == 0 and "12/12 trials passed" in out
    code, out, _ = run(capsys, ["fuzz", "--trials", "2", "--class", "self-adjoint", "--report", "json"])
    d = json.loads(out)
    assert d["failed"] == 0 and {r["class"] for r in d["reports"]} == {"self-adjoint"}


def test_fuzz_deterministic(capsys):
    argv = ["fuzz", "--trials", "3", "--seed", "9", "--report", "json"]
    _, a, _ = run(capsys, argv)
    _, b, _ = run(capsys, argv)
    assert a == b


def test_env_overrides(capsys, monkeypatch, t0_file):
    monkeypatch.setenv("LINREL_REPORT", "json")
    code, out, _ = run(capsys, ["info", t0_file])
    assert json.loads(out)["dim"] == 2
    # explicit flag wins
    code, out, _ = run(capsys, ["info", t0_file, "--report", "text"])
    assert out.startswith("label: t0")
    monkeypatch.setenv("LINREL_TOL", "-1")
    assert main(["verify", t0_file]) == 1
    monkeypatch.setenv("LINREL_TOL", "abc")
    assert main(["verify", t0_file]) == 2


def test_bad_input(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim_h": 1, "dim_k": 1, "generators": [[1]]}')
    code, _, err = run(capsys, ["verify", str(bad)])
    assert code == 2 and "generator 0" in err
    code, _, err = run(capsys, ["info", str(tmp_path / "missing.json")])
    assert code == 2 and "cannot read" in err


def test_dim_cap(capsys, tmp_path):
    big = tmp_path / "big.json"
    big.write_text(serialize(rel.product(sub.zero(5), sub.zero(5))))
    code, _, err = run(capsys, ["info", str(big), "--dim-cap", "4"])
    assert code == 2 and "cap" in err
    code, _, err = run(capsys, ["fuzz", "--max-dim", "9", "--dim-cap", "8"])
    assert code == 2


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["example", "nope"])
    assert info.value.code == 2


def test_stdin(capsys, monkeypatch, t0_file):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(open(t0_file).read()))
    code, out, _ = run(capsys, ["info", "-"])
    assert code == 0 and "dim: 2" in out
