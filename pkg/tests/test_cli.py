import json

import pytest

from cclosed import cli
from cclosed.generators import (complete_bipartite, complete_graph, cycle_graph, disjoint_union,
                                empty_graph, gen_projective, gnp, star)
from cclosed.graph import parse_edge_list, write_graph
from cclosed.verify import verify_graph

from conftest import census_of


@pytest.fixture
def graph_file(tmp_path):
    def make(g, name="g.txt"):
        path = tmp_path / name
        write_graph(g, path)
        return str(path)
    return make


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_star(capsys):
    code, out, _ = run(capsys, "generate", "star", "--t", "5")
    assert code == 0
    g = parse_edge_list(out)
    assert (g.n, g.m) == (6, 5)


def test_generate_projective(tmp_path, capsys):
    path = tmp_path / "fano.txt"
    assert run(capsys, "generate", "projective", "--p", "2", "-o", str(path))[0] == 0
    g = parse_edge_list(path.read_text())
    assert (g.n, g.m) == (28, 98)


def test_generate_gnp_golden_repeatable(tmp_path, capsys):
    texts = []
    for i in range(2):
        path = tmp_path / f"g{i}.txt"
        run(capsys, "generate", "gnp", "--n", "20", "--p", "0.3", "--seed", "42", "-o", str(path))
        texts.append(path.read_bytes())
    assert texts[0] == texts[1]
    from pathlib import Path
    assert texts[0] == (Path(__file__).parent / "golden" / "gnp-20-0.3-42.txt").read_bytes()


def test_generate_blowup_alias(capsys):
    code, out, _ = run(capsys, "generate", "blowup", "--pattern", "triangle", "--n", "9")
    assert code == 0 and parse_edge_list(out).m == 36


def test_generate_errors(capsys):
    assert run(capsys, "generate", "nope")[0] == 2
    assert run(capsys, "generate", "projective", "--p", "4")[0] == 2
    assert run(capsys, "generate", "star")[0] == 2


def test_closure(graph_file, capsys):
    code, out, _ = run(capsys, "closure", graph_file(complete_bipartite(2, 4)))
    assert code == 0 and out.splitlines()[0] == "c\t5"
    code, out, _ = run(capsys, "closure", "--json", graph_file(complete_graph(5)))
    assert json.loads(out)["closure"] == 1
    code, out, _ = run(capsys, "closure", "--json", graph_file(gen_projective(2)))
    assert json.loads(out)["closure"] == 3


def test_detect_triangle_sparse(graph_file, capsys):
    code, out, _ = run(capsys, "detect", "triangle", "--algo", "sparse", graph_file(complete_graph(3)))
    assert code == 0 and out.strip() == "found\t0 1 2"


def test_detect_co_diamond_on_c4(graph_file, capsys):
    code, out, _ = run(capsys, "detect", "co-diamond", graph_file(cycle_graph(4)))
    assert code == 1 and out.strip() == "none\ttwo-clique partition"


def test_detect_paw_characterisation(graph_file, capsys):
    g = disjoint_union(complete_graph(3), empty_graph(2))
    code, _, _ = run(capsys, "detect", "paw", graph_file(g))
    assert code == 1 and not census_of(g)["paw"]


def test_detect_json_schema(graph_file, capsys):
    code, out, _ = run(capsys, "detect", "claw", "--json", "--closure", graph_file(star(4)))
    data = json.loads(out)
    assert code == 0
    assert data["pattern"] == "claw" and data["found"] and len(data["witnesses"]) == 1
    assert data["closure"] == 2 and isinstance(data["steps"], dict)


def test_detect_errors(graph_file, capsys, tmp_path):
    path = graph_file(star(3))
    assert run(capsys, "detect", "pentagon", path)[0] == 2
    assert run(capsys, "detect", "K3", "--algo", "magic", path)[0] == 2
    assert run(capsys, "detect", "K3", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1\n1 x\n")
    code, _, err = run(capsys, "detect", "K3", str(bad))
    assert code == 2 and "line 3" in err
    assert run(capsys)[0] == 2


def test_enumerate(graph_file, capsys):
    path = graph_file(star(5))
    code, out, _ = run(capsys, "enumerate", "P3", path)
    assert code == 0 and len(out.splitlines()) == 10
    assert run(capsys, "enumerate", "claw", "--count-only", path)[1].strip() == "10"
    code, out, _ = run(capsys, "enumerate", "claw", "--json", "--algo", "matching", path)
    data = json.loads(out)
    assert data["count"] == 10 and len(data["witnesses"]) == 10 and data["closure"] == 2
    assert set(data) == {"pattern", "algo", "count", "steps", "closure", "witnesses"}


def test_verify_all_agree(graph_file, capsys):
    code, out, _ = run(capsys, "verify", graph_file(gnp(18, 0.4, 3)), graph_file(star(6), "s.txt"))
    assert code == 0
    assert out.count("all agree") == 2


def test_verify_reports_injected_fault(capsys):
    g = gnp(15, 0.4, 8)

    def broken(g, visitor=None, counter=None):
        # drops the last triangle
        found = sorted(census_of(g)["K3"])[:-1]
        for vs in found:
            from cclosed.graph import Occurrence
            visitor(Occurrence.of("K3", vs))
        return len(found)

    report = verify_graph(g, ["K3"], enumerators={"K3": {"broken": broken}})
    assert not report.all_agree
    (bad,) = report.mismatches
    assert bad.algo == "broken" and "missing=1" in bad.note
    assert "1 mismatch(es)" in report.to_text()


def test_verify_fault_injection_exit_code(graph_file, capsys, monkeypatch):
    from cclosed import verify
    real = verify.enumerators_for

    def corrupted(pid):
        table = dict(real(pid))
        if pid == "P3":
            table["p3"] = lambda g, visitor=None, counter=None: 0
        return table

    monkeypatch.setattr(verify, "enumerators_for", corrupted)
    code, out, _ = run(capsys, "verify", "--patterns", "P3", graph_file(star(4)))
    assert code == 3 and "MISMATCH" in out


def test_verify_oracle_cap_refusal(graph_file, capsys, monkeypatch):
    monkeypatch.setenv("ORACLE_CAP", "5")
    code, _, err = run(capsys, "verify", graph_file(star(6)))
    assert code == 2 and "cap" in err


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--family", "projective", "--sizes", "2,3", "--algo", "squares")
    lines = out.splitlines()
    assert code == 0 and lines[0].split("\t")[:6] == ["size", "n", "m", "c", "count", "steps"]
    assert len(lines) == 3
    assert run(capsys, "bench", "--family", "blowup", "--sizes", "4", "--algo", "p3")[0] == 2
