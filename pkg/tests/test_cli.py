import json
import subprocess
import sys

import pytest

from frobtwo.cli import main
from frobtwo.corpus import code_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_weights_table(capsys):
    code, out, _ = run(capsys, "weights", "Z4")
    assert code == 0
    rows = [line.split() for line in out.splitlines()[1:]]
    assert [w for _, w in rows] == ["0", "1", "2", "1"]


def test_weights_json(capsys):
    code, out, _ = run(capsys, "weights", "Z6", "--json")
    assert code == 0
    data = json.loads(out)
    assert [x["weight"] for x in data["weights"]] == ["0", "1/2", "3/2", "2", "3/2", "1/2"]


def test_ring_m2(capsys):
    code, out, _ = run(capsys, "ring", "M2(GF(2))")
    assert code == 0
    assert "order:       16" in out and "|units|:     6" in out and "Frobenius:   yes" in out


def test_ring_non_frobenius_json(capsys):
    code, out, _ = run(capsys, "ring", "table:f2xy", "--json")
    assert code == 0
    assert json.loads(out)["frobenius"] is False


def test_analyze_clebsch(capsys):
    code, out, _ = run(capsys, "analyze", str(code_path("clebsch")))
    assert code == 0
    rep = json.loads(out)
    assert (rep["profile"]["w1"], rep["profile"]["w2"]) == ("4", "8")
    m = rep["srg"]["measured"]
    assert (m["N"], m["K"], m["lambda"], m["mu"]) == ("16", "10", "6", "6")


def test_analyze_corpus_name(capsys):
    code, out, _ = run(capsys, "analyze", "clebsch.json", "--no-dual")
    assert code == 0 and "dual" not in json.loads(out)


def test_analyze_is_byte_deterministic(capsys):
    _, one, _ = run(capsys, "analyze", "z4_shrikhande", "--seed", "4")
    _, two, _ = run(capsys, "analyze", "z4_shrikhande", "--seed", "4")
    assert one == two


def test_srg_and_pds(capsys):
    code, out, _ = run(capsys, "srg", "z4_diagonal")
    assert code == 0
    data = json.loads(out)
    assert data["srg"]["measured"]["trivial"] is True
    assert data["verdicts"]["trivial-structure"]["status"] == "pass"
    code, out, _ = run(capsys, "pds", "clebsch")
    assert code == 0
    assert json.loads(out)["verdicts"]["equivalence"]["status"] == "pass"


def test_dot(capsys):
    code, out, _ = run(capsys, "srg", "clebsch", "--dot")
    assert code == 0 and out.startswith("graph Gamma {") and out.count(" -- ") == 80
    code, _, err = run(capsys, "pds", "clebsch", "--dot", "--max-dot-vertices", "8")
    assert code == 1 and "max_dot_vertices" in err


def test_dual(capsys):
    code, out, _ = run(capsys, "dual", "clebsch")
    assert code == 0
    data = json.loads(out)
    cols = data["dual"]["M1_columns"]
    assert len(cols) == 5 and {len(c) for c in cols} == {10}
    assert data["dual"]["graph"]["measured"]["K"] == "5"


def test_out_flag(tmp_path, capsys):
    path = tmp_path / "w.json"
    code, out, _ = run(capsys, "weights", "Z4", "--json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["ring"] == "Z4"


def test_search(tmp_path, capsys):
    out = tmp_path / "cat.csv"
    code, _, err = run(capsys, "search", "--ring", "Z4", "--k", "1", "--n", "1..3", "--modular-only", "--out", str(out))
    assert code == 0
    assert out.read_text().splitlines()[0].startswith("ring,k,n,r,w1,w2")
    assert (tmp_path / "cat.jsonl").exists()
    assert json.loads(err)["entries"] >= 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["weights"],
        ["weights", "Q7"],
        ["weights", "table:f2xy"],
        ["analyze", "/nonexistent/code.json"],
        ["search", "--ring", "Z4", "--k", "1", "--n", "2..3"],
        ["search", "--ring", "Z64", "--k", "1", "--n", "2", "--out", "x.csv"],
        ["search", "--ring", "Z4", "--k", "1", "--n", "a..b", "--out", "x.csv"],
        ["weights", "Z5000"],
        ["weights", "Z8", "--max-ring-order", "4"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err.strip()


def test_degenerate_needs_flag(tmp_path, capsys):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"ring": "Z4", "generator": [["1", "0"]]}))
    assert run(capsys, "analyze", str(path))[0] == 1
    assert run(capsys, "analyze", str(path), "--allow-degenerate")[0] == 0


def test_env_caps(monkeypatch, capsys):
    monkeypatch.setenv("FROBTWO_MAX_RING_ORDER", "4")
    assert run(capsys, "weights", "Z8")[0] == 1
    monkeypatch.setenv("FROBTWO_MAX_RING_ORDER", "nope")
    assert run(capsys, "weights", "Z4")[0] == 1


def test_verdict_failure_exits_2(monkeypatch, capsys):
    import frobtwo.cli as cli

    def broken(*args, **kwargs):
        return {"status": "fail", "failures": ["x"]}

    monkeypatch.setattr(cli, "analysis_report", broken)
    assert run(capsys, "analyze", "clebsch")[0] == 2


def test_identity_mismatch_exits_2(monkeypatch, capsys):
    import frobtwo.cli as cli
    from frobtwo.errors import IdentityMismatch

    def broken(*args, **kwargs):
        raise IdentityMismatch("sides differ")

    monkeypatch.setattr(cli, "compute_weight_table", broken)
    code, _, err = run(capsys, "weights", "Z4")
    assert code == 2 and "sides differ" in err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "frobtwo", "weights", "GF(4)"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.split()[-1] == "4/3"
