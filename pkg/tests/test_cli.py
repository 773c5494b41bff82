import io
import json

import pytest

from toughspec.cli import CAP_ENV, run
from toughspec.families import m_graph
from toughspec.graph import complete, cycle, petersen, star
from toughspec.graph6 import parse_graph6, write_graph6


def call(argv, stdin=b""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.BytesIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def g6(*gs):
    return b"".join(write_graph6(g) + b"\n" for g in gs)


def test_construct_graph6():
    code, out, _ = call(["construct", "--family", "mgraph", "--n", "18", "--out", "graph6"])
    assert code == 0
    (line,) = out.splitlines()
    assert parse_graph6(line) == m_graph(18)


def test_construct_other_outputs():
    code, out, _ = call(["construct", "--family", "K3", "--out", "edges"])
    assert code == 0 and out.splitlines() == ["3 3", "0 1", "0 2", "1 2"]
    code, out, _ = call(["construct", "--family", "union:K1,K2", "--out", "adjacency"])
    assert out.splitlines() == ["000", "001", "010"]


def test_spectral_remark_value():
    code, out, _ = call(["spectral", "--family", "join:K17,3K1"])
    assert code == 0
    assert "rho=18.72381" in out
    code, out, _ = call(["spectral", "--family", "join:K11,union:K8,K1"])
    assert "rho=18.35161" in out


def test_spectral_precision_and_all():
    code, out, _ = call(["spectral", "--family", "K4", "--precision", "2", "--all"])
    assert "rho=3.00" in out and "lambda=1.00" in out
    assert "eigenvalues=" in out and out.count(",") == 3


def test_stdin_input_for_every_subcommand():
    data = g6(cycle(6), complete(4))
    for argv in (["construct"], ["spectral"], ["toughness"], ["hamilton"], ["quotient"]):
        code, out, err = call(argv, data)
        assert code == 0, (argv, err)
        assert len([ln for ln in out.splitlines() if ln.startswith("graph=")]) in (0, 2)
    code, out, _ = call(["construct"], data)
    assert out.encode() == data


def test_file_input(tmp_path):
    path = tmp_path / "in.g6"
    path.write_bytes(g6(petersen()))
    code, out, _ = call(["toughness", "--file", str(path)])
    assert code == 0 and "toughness=4/3" in out


def test_toughness_outputs():
    code, out, _ = call(["toughness", "--family", "K1", "--s", "1"], b"")
    assert code == 0 and "toughness=inf" in out
    code, out, _ = call(["toughness", "--threshold", "1"], g6(m_graph(8)))
    assert "tough=yes" in out
    code, out, _ = call(["toughness", "--threshold", "3/2"], g6(cycle(6)))
    assert "tough=no cut=" in out


def test_hamilton_outputs():
    code, out, _ = call(["hamilton", "--family", "mgraph", "--n", "10"])
    assert code == 0 and "cycle=none" in out
    code, out, _ = call(["hamilton", "--family", "K5", "--through", "0-1,2-3"])
    assert "cycle=" in out and "none" not in out
    code, out, _ = call(["hamilton", "--family", "K4", "--path", "0", "3"])
    assert out.split("path=")[1].startswith("0,") and out.strip().endswith(",3")
    code, out, _ = call(["hamilton", "--family", "isolatedpair", "--n", "13", "--connected"])
    assert "hamiltonian_connected=no" in out


def test_quotient_output():
    code, out, _ = call(["quotient", "--family", "join:K2,union:K6,2K1", "--partition",
                         "0,1|2,3,4,5,6,7|8,9"])
    assert code == 0
    lines = out.splitlines()
    assert "equitable=yes" in lines[0]
    assert lines[2:] == ["1 6 2", "2 5 0", "2 0 0"]


def test_verify_one_tough_stream(tmp_path):
    from toughspec.families import one_tough_extremal
    path = tmp_path / "s.g6"
    path.write_bytes(g6(cycle(10), one_tough_extremal(10, 2)))
    code, out, _ = call(["verify", "thm1.1", "--delta", "2", "--stream", str(path)])
    assert code == 0
    assert "violations=0" in out and "equality_cases=1" in out


def test_verify_vacuous_run_is_flagged():
    code, out, _ = call(["verify", "one-tough", "--delta", "2"], g6(cycle(10)))
    assert code == 0 and "status=VACUOUS" in out and "# VACUOUS" in out


def test_verify_machine_formats_are_stable():
    args = ["verify", "t-tough", "--t", "1", "--samples", "500", "--seed", "7"]
    a = call(args + ["--format", "json-lines"])
    b = call(args + ["--format", "json-lines", "--jobs", "2"])
    assert a[0] == b[0] == 0 and a[1] == b[1]
    summary = json.loads(a[1].splitlines()[-1])["summary"]
    assert summary["violations"] == 0 and "claim=t-tough" in a[2]
    tsv = call(args + ["--format", "tsv", "--precision", "4"])[1]
    assert tsv.splitlines()[0] == "claim\tgraph6\tmeasured\tthreshold\tverdict"


def test_verify_writes_report(tmp_path):
    report = tmp_path / "r.jsonl"
    code, _, _ = call(["verify", "lemma2.2", "--trials", "20", "--report", str(report)])
    assert code == 0
    assert json.loads(report.read_text().splitlines()[-1])["summary"]["confirmed"] == 20


def test_violations_exit_with_one(monkeypatch):
    from toughspec.verify import claims

    def always_fails(self, g):
        return False, "forced failure"
    monkeypatch.setattr(claims.TToughClaim, "conclusion", always_fails)
    code, out, _ = call(["verify", "t-tough", "--t", "1"], g6(complete(12)))
    assert code == 1 and "violations=1" in out


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["spectral", "--nope"],
    ["verify", "thm9.9"],
    ["verify", "one-tough"],
    ["construct", "--family", "mgraph"],
    ["construct", "--family", "mgraph", "--n", "7"],
    ["construct", "--family", "K3", "--file", "x.g6"],
    ["hamilton", "--family", "K4", "--through", "0:1"],
    ["quotient", "--family", "K4", "--partition", "0,1|a"],
])
def test_usage_errors_exit_with_two(argv, capsys):
    code, _, err = call(argv)
    assert code == 2
    assert err or capsys.readouterr().err


def test_parser_errors_cite_the_token():
    code, _, err = call(["spectral", "--family", "join:K17,3X1"])
    assert code == 2 and "'3X1'" in err and "column 10" in err


def test_bad_graph6_on_stdin():
    code, _, err = call(["spectral"], b"C~\nD?\x01\n")
    assert code == 2 and "line 2" in err


def test_cap_override(monkeypatch):
    big = g6(star(25))
    code, _, err = call(["toughness"], big)
    assert code == 2 and CAP_ENV in err
    monkeypatch.setenv(CAP_ENV, "none")
    code, out, _ = call(["toughness"], big)
    assert code == 0 and "toughness=1/25" in out
    monkeypatch.setenv(CAP_ENV, "30")
    assert call(["toughness", "--threshold", "1"], big)[1].count("tough=no") == 1
    monkeypatch.setenv(CAP_ENV, "lots")
    code, _, err = call(["toughness"], big)
    assert code == 2 and CAP_ENV in err


def test_help_documents_the_mini_language(capsys):
    code, _, _ = call(["spectral", "--help"])
    assert code == 0
    text = capsys.readouterr().out
    assert "join:K17,3K1" in text and "<k>K<n>" in text
