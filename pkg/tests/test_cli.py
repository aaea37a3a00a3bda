import json

import pytest

from sepoly import cli
from sepoly.verify import CheckResult, Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_facets(capsys):
    code, out, _ = run(capsys, "count-facets", "--bipartite", "3", "3")
    assert code == 0 and out.strip() == "14"
    code, out, _ = run(capsys, "count-facets", "--multipartite", "1,1,2", "--json")
    assert json.loads(out) == {"count": 12, "formula": 12}


def test_facets_listing(capsys):
    code, out, _ = run(capsys, "facets", "--complete", "2")
    assert code == 0 and out.splitlines() == ["0 1", "1 0"]


def test_hstar_methods_agree(capsys):
    outs = set()
    for flag in ("--closed", "--double-sum", "--colorings", "--trees", "--ehrhart"):
        code, out, _ = run(capsys, "hstar", flag, "1", "1")
        assert code == 0
        outs.add(out)
    assert outs == {"1 + 5t + 5t^2 + t^3\n"}


def test_hstar_graph_parts_and_json(capsys):
    code, out, _ = run(capsys, "hstar", "--graph-parts", "2", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["hstar"]["coeffs"] == ["1", "5", "5", "1"] and (data["a"], data["b"]) == (1, 1)


def test_hstar_of_graph(capsys):
    code, out, _ = run(capsys, "hstar", "--complete", "4", "--json")
    assert code == 0 and json.loads(out)["hstar"]["coeffs"] == ["1", "9", "9", "1"]


def test_ehrhart_counts(capsys):
    code, out, _ = run(capsys, "ehrhart", "--bipartite", "2", "2", "--json")
    assert code == 0 and json.loads(out) == {"counts": [1, 9, 35, 91]}


def test_gamma(capsys):
    code, out, _ = run(capsys, "gamma", "2", "3", "--json")
    assert json.loads(out)["gamma"]["coeffs"] == ["1", "12", "18"]


def test_trees(capsys):
    code, out, _ = run(capsys, "trees", "1", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 12 and data["histogram"] == [1, 5, 5, 1]
    code, out, _ = run(capsys, "trees", "0", "0", "--list")
    assert "v0->w0" in out and "w0->v0" in out


def test_groebner(capsys):
    code, out, _ = run(capsys, "groebner", "--complete", "2", "--verify", "3")
    assert code == 0 and out.splitlines()[0] == "x[e1]*y[e1] - z^2" and "yes" in out
    code, out, _ = run(capsys, "groebner", "--initial-terms", "2", "2", "--verify", "3", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["initial_terms"]) == 10 and data["verify"]["ok"]


def test_complex(capsys):
    code, out, _ = run(capsys, "complex", "2", "2", "--json")
    data = json.loads(out)
    assert data["f_polynomial"] == data["gamma"] and data["balanced"]


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--amax", "2", "--bmax", "2", "--json")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    def fake(a, b, profile):
        return Report(a, b, profile, [CheckResult("gamma", 0, 0, "fail", "broken")])

    monkeypatch.setattr(cli, "verify_all", fake)
    code, out, _ = run(capsys, "verify", "--amax", "0", "--bmax", "0")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [[], ["nope"], ["hstar", "1"], ["hstar", "-1", "0"], ["hstar", "--graph-parts", "0", "2"],
     ["count-facets"], ["facets", "--edges", "/does/not/exist"], ["verify", "--amax", "1"],
     ["count-facets", "--multipartite", "2,x"], ["hstar", "--complete", "3", "1", "1"]],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_resource_guard_exit_code(capsys):
    code, _, err = run(capsys, "ehrhart", "--complete", "9", "--n-max", "1")
    assert code == 3 and "resource limit" in err
    code, _, _ = run(capsys, "hstar", "--colorings", "9", "9")
    assert code == 3


def test_edges_file(tmp_path, capsys):
    p = tmp_path / "c4.txt"
    p.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(capsys, "count-facets", "--edges", str(p))
    assert code == 0 and out.strip() == "6"
    q = tmp_path / "c4.json"
    q.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}))
    code, out2, _ = run(capsys, "count-facets", "--edges", str(q))
    assert out2 == out


def test_output_is_byte_identical_across_runs(capsys):
    _, first, _ = run(capsys, "trees", "1", "2", "--list", "--json")
    _, second, _ = run(capsys, "trees", "1", "2", "--list", "--json")
    assert first == second


def test_help_mentions_shift(capsys):
    with pytest.raises(SystemExit):
        cli.main(["hstar", "--help"])
    assert "K_{a+1,b+1}" in capsys.readouterr().out


def test_polynomial_json_round_trips(capsys):
    from sepoly.poly import ExactPolynomial

    _, out, _ = run(capsys, "hstar", "25", "25", "--json")
    h = ExactPolynomial.from_json(json.loads(out)["hstar"])
    assert max(h.coeffs) > 2**53 and all(isinstance(c, str) for c in json.loads(out)["hstar"]["coeffs"])
