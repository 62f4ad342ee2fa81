import random

import pytest

from equifactor import (
    ParseError,
    Partition,
    format_graph,
    format_partition,
    parse_graph_file,
    parse_partition_file,
)
from oracles import c4_two_cell, digraph5, random_digraph, random_undirected

C4_TEXT = """\
# the 4-cycle, paired-vertex ordering
graph 4 undirected
1 2
1 3
2 4
3 4
"""


def test_parse_c4():
    assert parse_graph_file(C4_TEXT) == c4_two_cell()[0]


def test_parse_single_vertex_directed():
    graph = parse_graph_file("graph 1 directed\n")
    assert graph.n == 1 and graph.int_rows() == [[0]]


def test_parse_digraph5_with_multiplicities():
    d5, _ = digraph5()
    lines = ["graph 5 directed"]
    for i, row in enumerate(d5.int_rows()):
        for j, mult in enumerate(row):
            if mult:
                lines.append(f"{i + 1} {j + 1} {mult}" if mult != 1 else f"{i + 1} {j + 1}")
    assert parse_graph_file("\n".join(lines)) == d5


def test_parse_errors_carry_line_and_column():
    with pytest.raises(ParseError) as exc:
        parse_graph_file("graph 4 undirected\n1 2\n1 oops\n")
    assert exc.value.line == 3 and exc.value.column == 3

    with pytest.raises(ParseError) as exc:
        parse_graph_file("graph 4 sideways\n")
    assert exc.value.line == 1

    with pytest.raises(ParseError) as exc:
        parse_graph_file("1 2\n")
    assert exc.value.line == 1

    with pytest.raises(ParseError) as exc:
        parse_graph_file("graph 2 directed\n1 5\n")
    assert exc.value.line == 2


def test_graph_roundtrip_random():
    rng = random.Random(61)
    for _ in range(20):
        graph = (
            random_undirected(rng, rng.randint(1, 7))
            if rng.random() < 0.5
            else random_digraph(rng, rng.randint(1, 7), signed=True)
        )
        assert parse_graph_file(format_graph(graph)) == graph


def test_graph_roundtrip_with_loops_and_negative_edges():
    text = "graph 3 undirected\n1 1 2\n1 2 -3\n2 3\n"
    graph = parse_graph_file(text)
    assert graph.int_rows() == [[2, -3, 0], [-3, 0, 1], [0, 1, 0]]
    assert parse_graph_file(format_graph(graph)) == graph


def test_parse_partition_defaults():
    pi = parse_partition_file("1 2\n3 4\n", 4)
    assert pi == Partition.of([(1, 2), (3, 4)])
    assert pi.representatives == (1, 3)


def test_parse_partition_with_reps():
    pi = parse_partition_file("1 2 rep 2\n3 4 rep 4\n", 4)
    assert pi.representatives == (2, 4)


def test_parse_partition_missing_vertex_named():
    with pytest.raises(ValueError, match=r"missing \[4\]"):
        parse_partition_file("1 2\n3\n", 4)


def test_parse_partition_overlap_named():
    with pytest.raises(ValueError, match=r"overlap on labels \[2\]"):
        parse_partition_file("1 2\n2 3\n", 3)


def test_parse_partition_rep_must_be_member():
    with pytest.raises(ParseError):
        parse_partition_file("1 2 rep 3\n3 4\n", 4)


def test_partition_roundtrip():
    pi = Partition.of([(2, 1), (4, 3)], representatives=(2, 4))
    assert parse_partition_file(format_partition(pi), 4) == pi
