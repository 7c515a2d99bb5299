import json

from rees_lab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_list(capsys):
    code, out = run(capsys, "list")
    assert code == 0 and "jonsson" in out.out


def test_verify_json(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, _ = run(capsys, "verify", "eulerian", "--n-max", "3", "--format", "json", "--out", str(path))
    data = json.loads(path.read_text())
    assert code == 0 and data["ok"] and data["suites"][0]["statement"] == "eulerian"


def test_verify_csv_stdout(capsys):
    code, out = run(capsys, "verify", "q-derangement", "--n-max", "2", "--q", "2", "3", "--format", "csv")
    assert code == 0 and out.out.startswith("suite,case,lhs,rhs,pass")


def test_verify_config_file(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"n_max": 2, "t": [2], "format": "json"}))
    code, out = run(capsys, "verify", "tree", "--config", str(cfg))
    assert code == 0 and json.loads(out.out)["suites"][0]["config"]["t"] == [2]


def test_unknown_suite_exit_code(capsys):
    code, out = run(capsys, "verify", "nope")
    assert code == 2 and "unknown suite" in out.err


def test_bad_q_exit_code(capsys):
    code, _ = run(capsys, "verify", "q-eulerian", "--q", "4")
    assert code == 2


def test_poset_build_and_betti(capsys, tmp_path):
    path = tmp_path / "p.json"
    code, _ = run(capsys, "poset", "build", "subspace", "--n", "2", "--q", "3", "--out", str(path))
    assert code == 0
    code, out = run(capsys, "betti", str(path))
    data = json.loads(out.out)
    assert code == 0 and data["euler_ok"] and data["betti"] == [0, 0, 0]
    code, out = run(capsys, "mobius", str(path))
    # the lattice already has a bottom, so its order complex is a cone
    assert code == 0 and json.loads(out.out)["mu"] == 0


def test_dot_output(capsys):
    code, out = run(capsys, "poset", "build", "boolean", "--n", "2", "--format", "dot")
    assert code == 0 and out.out.startswith("digraph")


def test_stats(capsys):
    code, out = run(capsys, "stats", "42153")
    data = json.loads(out.out)
    assert code == 0 and (data["exc"], data["maj"], data["exd"]) == (2, 7, [2, 3])


def test_poly_and_symfunc(capsys):
    code, out = run(capsys, "poly", "eulerian", "--n", "3", "--flavor", "exc")
    assert code == 0 and json.loads(out.out)
    code, out = run(capsys, "symfunc", "q-eulerian", "--n", "3", "--j", "1", "--basis", "s")
    assert code == 0 and json.loads(out.out)["coeffs"] == {"[2, 1]": "1", "[3]": "2"}


def test_failure_exit_code(capsys, monkeypatch):
    from rees_lab import suites

    def broken(cfg, report):
        report.add("always wrong", {}, 1, 2)
    spec = suites.SUITES["eulerian"]
    monkeypatch.setitem(suites.SUITES, "eulerian", spec.__class__(**{**spec.__dict__, "runner": broken}))
    code, _ = run(capsys, "verify", "eulerian", "--n-max", "2")
    assert code == 1
