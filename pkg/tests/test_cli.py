import json

import pytest

from equifactor.cli import run_command
from equifactor import format_graph, format_partition, petersen_graph
from oracles import digraph5, random_undirected

C4_TEXT = "graph 4 undirected\n1 2\n1 3\n2 4\n3 4\n"
C4_PART = "1 2\n3 4\n"


@pytest.fixture
def c4_files(tmp_path):
    graph = tmp_path / "c4.graph"
    part = tmp_path / "c4.part"
    graph.write_text(C4_TEXT)
    part.write_text(C4_PART)
    return str(graph), str(part)


@pytest.fixture
def petersen_file(tmp_path):
    path = tmp_path / "petersen.graph"
    path.write_text(format_graph(petersen_graph()))
    return str(path)


def test_factor_c4(c4_files, capsys):
    code = run_command(["factor", *c4_files])
    out = capsys.readouterr().out
    assert code == 0
    assert "x^2 - 2*x" in out and "x^2 + 2*x" in out
    assert "[PASS]" in out and "[FAIL]" not in out


def test_factor_json_matches_text_content(c4_files, capsys):
    assert run_command(["--json", "factor", *c4_files]) == 0
    doc = json.loads(capsys.readouterr().out)
    sections = {s["title"]: s for s in doc["sections"]}
    assert sections["quotient factor"]["coefficients"] == [0, -2, 1]
    assert sections["deletion factor"]["coefficients"] == [0, 2, 1]
    assert sections["product"]["coefficients"] == [0, 0, -4, 0, 1]
    assert all(v["status"] == "PASS" for v in doc["verdicts"])


def test_refine_petersen_distance_partition(petersen_file, capsys):
    code = run_command(["refine", petersen_file, "--seed", "singleton:1"])
    out = capsys.readouterr().out
    assert code == 0
    cells_line = next(line for line in out.splitlines() if line.strip().startswith("{"))
    # the three cells are the distance classes from vertex 1
    assert "{1 |" in cells_line
    assert run_command(["--json", "refine", petersen_file, "--seed", "singleton:1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    refined = next(
        s for s in doc["sections"] if s["title"] == "coarsest equitable refinement"
    )
    assert sorted(map(sorted, refined["cells"])) == [
        [1],
        [2, 5, 7, 8, 9, 10],
        [3, 4, 6],
    ]


def test_quotient_fail_on_non_equitable(tmp_path, capsys):
    graph = tmp_path / "p.graph"
    part = tmp_path / "p.part"
    graph.write_text(format_graph(petersen_graph()))
    part.write_text("1 2 3 4 5 6\n7 8 9 10\n")
    code = run_command(["quotient", str(graph), str(part)])
    out = capsys.readouterr().out
    assert code == 1
    assert "[FAIL]" in out and "not equitable" in out


def test_delete_reports_prop_consistency(c4_files, capsys):
    code = run_command(["delete", *c4_files, "--reps", "2,4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "deletion matrix" in out
    assert "-1   1" in out or "-1  1" in out


def test_zeta_c4(c4_files, capsys):
    code = run_command(["zeta", c4_files[0]])
    out = capsys.readouterr().out
    assert code == 0
    assert "ihara" in out.lower()
    assert "t^8 - 2*t^4 + 1" in out


def test_zeta_factor_c4(c4_files, capsys):
    assert run_command(["zeta-factor", *c4_files]) == 0
    assert "[PASS]" in capsys.readouterr().out


def test_laplacian_c4(c4_files, capsys):
    assert run_command(["laplacian", *c4_files]) == 0
    out = capsys.readouterr().out
    assert "x^2 - 2*x" in out  # quotient factor x(x-2)
    assert run_command(["laplacian", "--signless", *c4_files]) == 0


def test_join_subcommand(tmp_path, capsys):
    h = tmp_path / "h.graph"
    x1 = tmp_path / "x1.graph"
    x2 = tmp_path / "x2.graph"
    h.write_text("graph 2 undirected\n1 2\n")
    x1.write_text("graph 2 undirected\n1 2\n")
    x2.write_text("graph 2 undirected\n")
    code = run_command(["join", str(h), str(x1), str(x2)])
    out = capsys.readouterr().out
    assert code == 0
    assert "join characteristic polynomial identities" in out
    assert "join zeta identities" in out
    assert "[FAIL]" not in out


def test_teranishi_subcommand(tmp_path, capsys):
    h = tmp_path / "h.graph"
    p3 = tmp_path / "p3.graph"
    p3_part = tmp_path / "p3.part"
    k1 = tmp_path / "k1.graph"
    k1_part = tmp_path / "k1.part"
    h.write_text("graph 2 undirected\n1 2\n")
    p3.write_text("graph 3 undirected\n1 2\n2 3\n")
    p3_part.write_text("1 3\n2\n")
    k1.write_text("graph 1 undirected\n")
    k1_part.write_text("1\n")
    code = run_command(
        ["teranishi", str(h), str(p3), str(p3_part), str(k1), str(k1_part)]
    )
    out = capsys.readouterr().out
    assert code == 0 and "[PASS]" in out


def test_verify_auto_refine_random_graph(tmp_path, capsys):
    import random

    graph = random_undirected(random.Random(12345), 6)
    path = tmp_path / "random.graph"
    path.write_text(format_graph(graph))
    code = run_command(["verify", str(path)])
    out = capsys.readouterr().out
    assert code == 0
    assert "[FAIL]" not in out


def test_verify_digraph(tmp_path, capsys):
    d5, pi = digraph5()
    graph = tmp_path / "d5.graph"
    part = tmp_path / "d5.part"
    graph.write_text(format_graph(d5))
    part.write_text(format_partition(pi))
    assert run_command(["verify", str(graph), str(part)]) == 0
    assert "[FAIL]" not in capsys.readouterr().out


def test_exit_code_2_on_usage_and_parse_errors(tmp_path, capsys):
    assert run_command(["frobnicate"]) == 2
    capsys.readouterr()
    assert run_command(["factor", str(tmp_path / "missing.graph"), "x"]) == 2
    bad = tmp_path / "bad.graph"
    bad.write_text("graph two undirected\n")
    assert run_command(["zeta", str(bad)]) == 2
    capsys.readouterr()


def test_exit_code_2_on_invalid_zeta_input(tmp_path, capsys):
    d5, _ = digraph5()
    path = tmp_path / "d5.graph"
    path.write_text(format_graph(d5))
    assert run_command(["zeta", str(path)]) == 2
    capsys.readouterr()


def test_reps_flag_overrides_representatives(c4_files, capsys):
    assert run_command(["--json", "delete", *c4_files, "--reps", "2,4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    part = next(s for s in doc["sections"] if s["title"] == "partition")
    assert part["representatives"] == [2, 4]
    deletion = next(s for s in doc["sections"] if s["title"] == "deletion matrix")
    assert deletion["matrix"] == [[-1, 1], [1, -1]]


def test_json_flag_accepted_after_subcommand(c4_files, capsys):
    assert run_command(["zeta", c4_files[0], "--json"]) == 0
    json.loads(capsys.readouterr().out)


def test_json_and_text_carry_identical_numeric_content(c4_files, capsys):
    assert run_command(["--json", "factor", *c4_files]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert run_command(["factor", *c4_files]) == 0
    text = capsys.readouterr().out
    # every matrix entry, coefficient list, and display string from the JSON
    # document also appears in the text rendering
    for section in doc["sections"]:
        if "matrix" in section:
            for row in section["matrix"]:
                for value in row:
                    assert str(value) in text
        if "coefficients" in section:
            assert str(section["coefficients"]) in text
            assert section["display"] in text
