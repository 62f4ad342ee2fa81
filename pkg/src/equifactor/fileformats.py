"""Plain-text graph and partition file formats.

Graph files:
    # comments start with a hash
    graph <n> <directed|undirected>
    <u> <v> [multiplicity]        one edge per line, default multiplicity 1

Partition files:
    <v1> <v2> ...  [rep <label>]  one cell per line, optional representative

Vertex labels are the integers 1..n. Parsing is total: any malformed input
raises ParseError carrying the line and column of the offending token.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import SignedDigraph, build_graph, is_undirected
from .partitions import Partition


def _tokenize(line: str) -> list[tuple[str, int]]:
    """Tokens with their 1-based column positions; comments stripped."""
    if "#" in line:
        line = line[: line.index("#")]
    tokens = []
    col = 0
    for raw in line.split(" "):
        if raw.strip():
            tokens.append((raw.strip(), col + 1))
        col += len(raw) + 1
    return tokens


def _int_token(token: str, line_no: int, col: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, col, f"expected {what}, got {token!r}") from None


def parse_graph_file(text: str) -> SignedDigraph:
    """Parse the graph grammar above into a signed digraph."""
    lines = text.splitlines()
    header: tuple[int, bool] | None = None
    edges: list[tuple[int, int, int]] = []
    for line_no, line in enumerate(lines, start=1):
        tokens = _tokenize(line)
        if not tokens:
            continue
        if header is None:
            if tokens[0][0] != "graph":
                raise ParseError(
                    line_no, tokens[0][1], f"expected 'graph' header, got {tokens[0][0]!r}"
                )
            if len(tokens) != 3:
                col = tokens[-1][1] if len(tokens) > 3 else len(line) + 1
                raise ParseError(line_no, col, "header must be 'graph <n> <directed|undirected>'")
            n = _int_token(tokens[1][0], line_no, tokens[1][1], "a vertex count")
            mode = tokens[2][0]
            if mode not in ("directed", "undirected"):
                raise ParseError(
                    line_no, tokens[2][1], f"expected 'directed' or 'undirected', got {mode!r}"
                )
            header = (n, mode == "undirected")
            continue
        if len(tokens) not in (2, 3):
            raise ParseError(
                line_no, tokens[0][1], "edge lines are '<u> <v> [multiplicity]'"
            )
        u = _int_token(tokens[0][0], line_no, tokens[0][1], "a vertex label")
        v = _int_token(tokens[1][0], line_no, tokens[1][1], "a vertex label")
        mult = 1
        if len(tokens) == 3:
            mult = _int_token(tokens[2][0], line_no, tokens[2][1], "an edge multiplicity")
            if mult == 0:
                raise ParseError(line_no, tokens[2][1], "edge multiplicity must be nonzero")
        n = header[0]
        if not (1 <= u <= n):
            raise ParseError(line_no, tokens[0][1], f"vertex {u} is outside 1..{n}")
        if not (1 <= v <= n):
            raise ParseError(line_no, tokens[1][1], f"vertex {v} is outside 1..{n}")
        edges.append((u, v, mult))
    if header is None:
        raise ParseError(1, 1, "missing 'graph <n> <directed|undirected>' header")
    return build_graph(header[0], edges, undirected=header[1])


def format_graph(x: SignedDigraph) -> str:
    """Inverse of parse_graph_file for graphs labelled 1..n."""
    if x.vertices != tuple(range(1, x.n + 1)):
        raise ValueError("only graphs labelled 1..n can be serialized")
    undirected = is_undirected(x)
    lines = [f"graph {x.n} {'undirected' if undirected else 'directed'}"]
    rows = x.int_rows()
    for i in range(x.n):
        for j in range(x.n):
            if undirected and j < i:
                continue
            mult = rows[i][j]
            if mult == 0:
                continue
            if mult == 1:
                lines.append(f"{i + 1} {j + 1}")
            else:
                lines.append(f"{i + 1} {j + 1} {mult}")
    return "\n".join(lines) + "\n"


def parse_partition_file(text: str, n: int) -> Partition:
    """Parse one cell per line; 'rep <label>' designates the representative.

    Cells must exactly cover 1..n; gaps and overlaps are reported with the
    offending labels.
    """
    cells: list[tuple[int, ...]] = []
    reps: list[int | None] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line)
        if not tokens:
            continue
        members: list[int] = []
        rep: int | None = None
        i = 0
        while i < len(tokens):
            tok, col = tokens[i]
            if tok == "rep":
                if i + 1 >= len(tokens):
                    raise ParseError(line_no, col, "'rep' must be followed by a label")
                if i + 2 != len(tokens):
                    raise ParseError(
                        line_no, tokens[i + 2][1], "'rep <label>' must end the line"
                    )
                rep = _int_token(tokens[i + 1][0], line_no, tokens[i + 1][1], "a vertex label")
                i += 2
                continue
            members.append(_int_token(tok, line_no, col, "a vertex label"))
            i += 1
        if not members:
            raise ParseError(line_no, tokens[0][1], "cells must be nonempty")
        if rep is not None and rep not in members:
            raise ParseError(line_no, tokens[0][1], f"representative {rep} is not in its cell")
        cells.append(tuple(members))
        reps.append(rep)

    if not cells:
        raise ParseError(1, 1, "partition file has no cells")
    covered = [v for cell in cells for v in cell]
    duplicates = sorted({v for v in covered if covered.count(v) > 1})
    if duplicates:
        raise ValueError(f"cells overlap on labels {duplicates}")
    missing = sorted(set(range(1, n + 1)) - set(covered))
    extra = sorted(set(covered) - set(range(1, n + 1)))
    if missing or extra:
        raise ValueError(
            f"partition must cover 1..{n} exactly (missing {missing}, extraneous {extra})"
        )
    final_reps = tuple(
        rep if rep is not None else min(cell) for rep, cell in zip(reps, cells)
    )
    return Partition(tuple(cells), final_reps)


def format_partition(pi: Partition) -> str:
    lines = [
        " ".join(str(v) for v in cell) + f" rep {rep}"
        for cell, rep in zip(pi.cells, pi.representatives)
    ]
    return "\n".join(lines) + "\n"
