import json

import pytest

from josephus.cli import main
from josephus.visualization.diagram import read_dot


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_default_instance(capsys, oracle):
    code, out, _ = run(capsys, "solve", "-n", "100", "-m", "10")
    assert code == 0
    assert out == f"{oracle(100, 10)[1]}\n"


def test_solve_every_algorithm_agrees(capsys, oracle):
    for algorithm in ["imperative", "zipper", "order-statistic", "recurrence"]:
        code, out, _ = run(capsys, "solve", "-n", "41", "-m", "3", "-a", algorithm, "--format", "json")
        assert code == 0
        assert json.loads(out)["survivor"] == oracle(41, 3)[1]


def test_solve_one_prisoner(capsys):
    assert run(capsys, "solve", "-n", "1", "-m", "3")[1] == "1\n"


def test_solve_with_order(capsys):
    code, out, _ = run(capsys, "solve", "-n", "6", "-m", "3", "--order")
    assert code == 0
    assert out == "order: 3 6 4 2 5\nsurvivor: 1\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "-n", "0", "-m", "3"],
        ["solve", "-n", "5", "-m", "x"],
        ["solve", "--bogus"],
        ["solve", "-a", "recurrence", "--order"],
        ["trace", "-a", "order-statistic", "--states"],
        ["bench", "--factor", "1"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2


def test_closed_form_needs_m2(capsys):
    code, out, err = run(capsys, "solve", "-n", "5", "-m", "3", "-a", "closed-form")
    assert code == 1
    assert out == ""
    assert "m = 2" in err


def test_trace_json(capsys):
    code, out, _ = run(capsys, "trace", "-n", "6", "-m", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == [3, 6, 4, 2, 5]
    assert data["survivor"] == 1


def test_trace_single_prisoner(capsys):
    assert json.loads(run(capsys, "trace", "-n", "1", "-m", "1")[1])["order"] == []


def test_trace_csv(capsys):
    _, out, _ = run(capsys, "trace", "-n", "6", "-m", "3", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "step,killed,remaining_count"
    assert len(lines) == 1 + 5


def test_trace_states(capsys):
    _, out, _ = run(capsys, "trace", "-n", "6", "-m", "3", "-a", "zipper", "--states")
    assert json.loads(out)["states"][0] == {"focus": 4, "rest": [5, 6, 1, 2]}


def test_trace_text(capsys):
    _, out, _ = run(capsys, "trace", "-n", "6", "-m", "3", "--format", "text")
    assert out.splitlines()[1] == "kill 1: 3    remaining [1, 2, 4, 5, 6]"
    assert out.endswith("survivor: 1\n")


def test_verify_holds(capsys):
    code, out, _ = run(capsys, "verify", "--universe", "6", "-m", "3", "--jobs", "2")
    assert code == 0
    verdict = json.loads(out)
    assert verdict["morphism"] and verdict["isomorphism"]
    assert verdict["states_checked"] == 1956


def test_verify_trivial_universe(capsys):
    assert run(capsys, "verify", "--universe", "1", "-m", "1")[0] == 0


def test_verify_guard(capsys):
    code, out, err = run(capsys, "verify", "--universe", "9", "-m", "3")
    assert code == 1
    assert out == ""
    assert "limit" in err


def test_verify_counterexample_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "--universe", "4", "-m", "3", "--reading", "line6")
    assert code == 1
    assert json.loads(out)["counterexample"] is not None


def test_diagram_with_map(capsys):
    code, out, _ = run(capsys, "diagram", "--universe", "2", "-m", "3", "--map", "--check")
    assert code == 0
    graph = read_dot(out)
    assert len(graph.nodes) == 10
    assert len(graph.edges_with_style("dashed")) == 4


def test_diagram_reachable_p(capsys):
    _, out, _ = run(capsys, "diagram", "--universe", "6", "-m", "3", "--reachable", "--system", "p")
    assert len(read_dot(out).nodes) == 6


def test_diagram_over_cap(capsys):
    assert run(capsys, "diagram", "--universe", "4", "--map")[0] == 1


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--start", "16", "--count", "2", "--solvers", "zipper", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,solver,operations,survivor,ratio"
    first, second = (line.split(",") for line in lines[1:])
    assert first[:3] == ["16", "zipper", "150"]
    assert first[4] == ""
    assert second[:3] == ["32", "zipper", "310"]
    assert float(second[4]) == pytest.approx(310 / 150)


def test_tangle_bundled(capsys):
    code, out, _ = run(capsys, "tangle", "romans.py.web", "--root", "The main program")
    assert code == 0
    assert out.startswith("def removeTen(prisoners):\n")
    assert out.endswith("print(prisoners)\n")
    assert len(out.splitlines()) == 11


def test_tangle_errors(capsys, tmp_path):
    source = tmp_path / "broken.web"
    source.write_text("<<root>>=\n<<missing>>\n@\n", encoding="utf-8")
    code, _, err = run(capsys, "tangle", str(source))
    assert code == 1
    assert "missing" in err
    assert run(capsys, "tangle", str(tmp_path / "absent.web"))[0] == 1


def test_weave_empty(capsys, tmp_path):
    source = tmp_path / "empty.web"
    source.write_text("", encoding="utf-8")
    assert run(capsys, "weave", str(source)) == (0, "## Index\n", "")


def test_chunks_csv(capsys):
    _, out, _ = run(capsys, "chunks", "romans.hs.web", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "ordinal,name,definition_lines,reference_sites"
    assert len(lines) == 4


def test_output_file(capsys, tmp_path):
    target = tmp_path / "program.py"
    code, out, _ = run(capsys, "tangle", "romans.py.web", "-o", str(target))
    assert code == 0
    assert out == ""
    data = target.read_bytes()
    assert b"\r" not in data
    assert data.endswith(b"print(prisoners)\n")


def test_identical_runs_identical_output(capsys):
    first = run(capsys, "verify", "--universe", "3", "-m", "2")
    second = run(capsys, "verify", "--universe", "3", "-m", "2")
    assert first == second


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert "josephus" in capsys.readouterr().out
