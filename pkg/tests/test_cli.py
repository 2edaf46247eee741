import json

import pytest

from hypercr.cli import main

NESTED = '{"type":"hypergraph","n":3,"edges":[[1,2],[1,2,3]]}'
PATH = '{"type":"hypergraph","n":3,"edges":[[1,2],[2,3]]}'
B1 = '{"type":"hypergraph","n":1,"edges":[[1]]}'
ARC = '{"type":"digraph","n":2,"arcs":[[1,2]]}'
DOTS = '{"type":"digraph","n":2,"arcs":[]}'


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in (("nested", NESTED), ("path", PATH), ("b1", B1), ("arc", ARC), ("dots", DOTS)):
        p = tmp_path / f"{name}.json"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(argv, capsys):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_cr(files, capsys):
    assert run(["cr", files["nested"], files["nested"]], capsys)[:2] == (0, "not distinguished\n")
    assert run(["cr", files["nested"], files["path"]], capsys)[:2] == (0, "distinguished at round 1\n")


def test_hom(files, capsys):
    assert run(["hom", "--kind", "inhom", files["b1"], files["nested"]], capsys)[:2] == (0, "5\n")
    assert run(["hom", files["arc"], files["arc"]], capsys)[:2] == (0, "1\n")
    code, _, err = run(["hom", "--kind", "aut", files["arc"], files["arc"]], capsys)
    assert code == 2 and "only applies" in err


def test_enumerate(capsys):
    code, out, _ = run(["enumerate", "ba", "--max-weight", "3"], capsys)
    assert code == 0 and len(out.splitlines()) == 4
    assert json.loads(out.splitlines()[0]) == {"type": "hypergraph", "n": 1, "edges": []}


def test_verify_named(files, capsys):
    code, out, _ = run(["verify", "decomposition-inhom", files["b1"], files["nested"]], capsys)
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(["verify", "hom-witness", files["nested"], files["path"], "--budget", "1"], capsys)
    assert code == 1 and json.loads(out)["detail"]["status"] == "budget_exhausted"


def test_verify_sweep_deterministic(capsys):
    first = run(["verify", "--sweep", "nested", "--sweep", "vandermonde"], capsys)
    second = run(["verify", "--sweep", "nested", "--sweep", "vandermonde"], capsys)
    assert first[0] == 0 and first[1] == second[1]
    assert [json.loads(x)["check"] for x in first[1].splitlines()] == ["nested_edges_round1", "edge_size_round_trip"]


def test_dag(files, capsys):
    code, out, _ = run(["dag", "tournament", "--n", "3"], capsys)
    assert json.loads(out)["arcs"] == [[1, 2], [1, 3], [2, 3]]
    code, out, _ = run(["dag", "a3-distinguish", files["arc"], files["dots"]], capsys)
    assert code == 0 and json.loads(out)["status"] == "separated"
    code, out, _ = run(["dag", "tensor", files["arc"], files["arc"]], capsys)
    assert json.loads(out)["n"] == 4


def test_fmt_fixed_point(files, capsys, tmp_path):
    code, out, _ = run(["fmt", files["nested"]], capsys)
    again = tmp_path / "again.json"
    again.write_text(out)
    assert run(["fmt", str(again)], capsys)[1] == out


def test_out_flag(files, capsys, tmp_path):
    target = tmp_path / "o.txt"
    assert main(["--out", str(target), "hom", "--kind", "inhom", files["b1"], files["nested"]]) == 0
    assert target.read_text() == "5\n"


def test_errors(files, capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    code, _, err = run(["fmt", str(bad)], capsys)
    assert code == 2 and "malformed JSON" in err
    code, _, err = run(["fmt", str(tmp_path / "missing.json")], capsys)
    assert code == 2 and "cannot read" in err
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "ba", "--max-weight", "-1"])
    assert exc.value.code == 2
    code, _, err = run(["verify", "decomposition-hom", files["b1"]], capsys)
    assert code == 2 and "takes 2" in err
