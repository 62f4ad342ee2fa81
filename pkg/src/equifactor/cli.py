"""Command-line driver for the factorization library.

Subcommands
-----------
refine        coarsest equitable refinement of a seed partition
quotient      quotient matrix of an equitable pair
delete        deletion matrix and deletion graph
factor        characteristic polynomial split into quotient x deletion factors
laplacian     the same split for the (signless) Laplacian
zeta          Bartholdi zeta reciprocal as a bivariate term table
zeta-factor   zeta reciprocal split into s1 power, quotient and deletion parts
join          closed-form join identities checked against the assembled graph
teranishi     per-component-partition factorization of a join
verify        run the full identity suite on one input

Usage examples
--------------
  equifactor factor c4.graph c4.part
  equifactor refine petersen.graph --seed singleton:1
  equifactor zeta petersen.graph --json
  equifactor join h.graph x1.graph x2.graph --alpha 1 --diag 0,0
  equifactor verify random.graph

Exit codes: 0 when every verdict passes, 1 when an identity fails,
2 for usage, file or parse errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from fractions import Fraction

from .decomposition import (
    deletion_graph,
    deletion_matrix,
    factor_char_poly,
    laplacian_factors,
    similarity_transform,
)
from .errors import ConsistencyError, NotEquitableError, ParseError
from .fileformats import parse_graph_file, parse_partition_file
from .graphs import (
    SignedDigraph,
    edge_count,
    is_connected,
    is_undirected,
    is_unsigned,
)
from .joins import JoinSpec, build_join, join_char_poly, join_zeta_reciprocal, teranishi_factor
from .matrices import Matrix, char_poly
from .partitions import (
    Partition,
    characteristic_matrix,
    check_equitable,
    coarsest_equitable,
    selector_matrix,
)
from .polynomials import BiPoly, UniPoly
from .zeta import bartholdi_reciprocal, ihara_specialize, zeta_factor


# -- report plumbing -------------------------------------------------------


def _scalar(v) -> int | str:
    """Exact scalar as JSON content: int when integral, 'p/q' otherwise."""
    f = Fraction(v)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _matrix_payload(m: Matrix) -> dict:
    return {"matrix": [[_scalar(v) for v in row] for row in m.data]}


def _poly_payload(p: UniPoly, var: str = "x") -> dict:
    return {
        "coefficients": [_scalar(c) for c in p.coeffs],
        "display": p.display(var),
    }


def _bipoly_payload(p: BiPoly) -> dict:
    return {
        "terms": [[du, dt, _scalar(c)] for du, dt, c in p.sorted_terms()],
        "display": p.display(),
    }


def _partition_payload(pi: Partition) -> dict:
    return {
        "cells": [list(cell) for cell in pi.cells],
        "representatives": list(pi.representatives),
    }


class Report:
    """Ordered sections plus PASS/FAIL verdicts, rendered as text or JSON."""

    def __init__(self, command: str):
        self.command = command
        self.sections: list[tuple[str, object]] = []
        self.verdicts: list[dict] = []
        self._start = time.perf_counter()

    def add(self, title: str, payload) -> None:
        self.sections.append((title, payload))

    def verdict(self, name: str, ok: bool, witness: str | None = None) -> None:
        entry: dict = {"name": name, "status": "PASS" if ok else "FAIL"}
        if witness is not None:
            entry["witness"] = witness
        self.verdicts.append(entry)

    def check(self, name: str, thunk) -> bool:
        """Run thunk; exceptions and falsy results become FAIL verdicts."""
        try:
            result = thunk()
        except (ConsistencyError, NotEquitableError, ValueError) as err:
            self.verdict(name, False, str(err))
            return False
        if result is False:
            self.verdict(name, False)
            return False
        self.verdict(name, True)
        return True

    @property
    def failed(self) -> bool:
        return any(v["status"] == "FAIL" for v in self.verdicts)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "sections": [{"title": t, **self._jsonable(p)} for t, p in self.sections],
            "verdicts": self.verdicts,
            "timing_seconds": round(time.perf_counter() - self._start, 6),
        }

    @staticmethod
    def _jsonable(payload) -> dict:
        if isinstance(payload, dict):
            return payload
        return {"value": payload}

    def to_text(self) -> str:
        lines = [f"== {self.command} =="]
        for title, payload in self.sections:
            lines.append(f"{title}:")
            lines.extend(self._render(payload))
        for v in self.verdicts:
            line = f"[{v['status']}] {v['name']}"
            if "witness" in v:
                line += f"  ({v['witness']})"
            lines.append(line)
        lines.append(f"elapsed: {time.perf_counter() - self._start:.4f}s")
        return "\n".join(lines)

    @staticmethod
    def _render(payload) -> list[str]:
        if isinstance(payload, dict):
            if "matrix" in payload:
                rows = payload["matrix"]
                if not rows or not rows[0]:
                    return ["  (empty matrix)"]
                cells = [[str(v) for v in row] for row in rows]
                width = max(len(c) for row in cells for c in row)
                return ["  " + "  ".join(c.rjust(width) for c in row) for row in cells]
            if "coefficients" in payload:
                return [
                    f"  coefficients (ascending): {payload['coefficients']}",
                    f"  display: {payload['display']}",
                ]
            if "terms" in payload:
                out = [f"  display: {payload['display']}", "  terms (u-deg, t-deg, coeff):"]
                out.extend(f"    {du} {dt} {c}" for du, dt, c in payload["terms"])
                return out
            if "cells" in payload:
                body = " | ".join(
                    " ".join(str(v) for v in cell) for cell in payload["cells"]
                )
                reps = ", ".join(str(r) for r in payload["representatives"])
                return [f"  {{{body}}} reps ({reps})"]
            return [f"  {k}: {v}" for k, v in payload.items()]
        return [f"  {payload}"]


# -- input loading ----------------------------------------------------------


def _load_graph(path: str) -> SignedDigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_file(fh.read())


def _load_partition(path: str, n: int, reps: str | None) -> Partition:
    with open(path, encoding="utf-8") as fh:
        pi = parse_partition_file(fh.read(), n)
    return _apply_reps(pi, reps)


def _apply_reps(pi: Partition, reps: str | None) -> Partition:
    if reps is None:
        return pi
    labels = [int(tok) for tok in reps.split(",") if tok.strip()]
    if len(labels) != len(pi.cells):
        raise ValueError(
            f"--reps lists {len(labels)} labels but the partition has {len(pi.cells)} cells"
        )
    return pi.with_representatives(labels)


def _seed_partition(spec: str, x: SignedDigraph) -> Partition:
    if spec == "trivial":
        return Partition.trivial(x.vertices)
    if spec.startswith("singleton:"):
        v = int(spec.split(":", 1)[1])
        if v not in x.vertices:
            raise ValueError(f"seed vertex {v} is not in the graph")
        rest = tuple(w for w in x.vertices if w != v)
        if not rest:
            return Partition.singletons(x.vertices)
        return Partition.of([(v,), rest])
    with open(spec, encoding="utf-8") as fh:
        return parse_partition_file(fh.read(), x.n)


def _echo_input(report: Report, x: SignedDigraph, pi: Partition | None = None) -> None:
    kind = "undirected" if is_undirected(x) else "directed"
    report.add("input graph", {"vertices": x.n, "kind": kind})
    report.add("adjacency", _matrix_payload(x.adjacency))
    if pi is not None:
        report.add("partition", _partition_payload(pi))


# -- subcommand handlers ----------------------------------------------------


def cmd_refine(args) -> Report:
    report = Report("refine")
    x = _load_graph(args.graph)
    seed = _seed_partition(args.seed, x)
    _echo_input(report, x)
    report.add("seed", _partition_payload(seed))
    pi = coarsest_equitable(x, seed)
    report.add("coarsest equitable refinement", _partition_payload(pi))
    quotient = check_equitable(x.adjacency, pi, x.vertices)
    report.add("quotient matrix", _matrix_payload(quotient))
    report.verdict("refined partition is equitable", True)
    return report


def cmd_quotient(args) -> Report:
    report = Report("quotient")
    x = _load_graph(args.graph)
    pi = _load_partition(args.partition, x.n, args.reps)
    _echo_input(report, x, pi)

    def run():
        quotient = check_equitable(x.adjacency, pi, x.vertices)
        report.add("quotient matrix", _matrix_payload(quotient))
        return True

    report.check("partition is equitable", run)
    return report


def cmd_delete(args) -> Report:
    report = Report("delete")
    x = _load_graph(args.graph)
    pi = _load_partition(args.partition, x.n, args.reps)
    _echo_input(report, x, pi)
    result = deletion_graph(x, pi)
    report.add("deleted vertices (cell-major)", {"vertices": list(result.deleted_vertices)})
    report.add("deletion matrix", _matrix_payload(result.matrix))
    report.verdict("deletion graph adjacency equals deletion matrix", True)
    return report


def cmd_factor(args) -> Report:
    report = Report("factor")
    x = _load_graph(args.graph)
    pi = _load_partition(args.partition, x.n, args.reps)
    _echo_input(report, x, pi)

    def run():
        quotient = check_equitable(x.adjacency, pi, x.vertices)
        report.add("quotient matrix", _matrix_payload(quotient))
        report.add(
            "deletion matrix",
            _matrix_payload(deletion_matrix(x.adjacency, pi, x.vertices).matrix),
        )
        qf, df = factor_char_poly(x.adjacency, pi, x.vertices)
        report.add("quotient factor", _poly_payload(qf))
        report.add("deletion factor", _poly_payload(df))
        product = qf * df
        report.add("product", _poly_payload(product))
        report.add(
            "factored form", f"({qf.display()}) * ({df.display()})"
        )
        return product == char_poly(x.adjacency)

    report.check("quotient factor x deletion factor = characteristic polynomial", run)
    return report


def cmd_laplacian(args) -> Report:
    name = "signless Laplacian" if args.signless else "Laplacian"
    report = Report("laplacian")
    x = _load_graph(args.graph)
    pi = _load_partition(args.partition, x.n, args.reps)
    _echo_input(report, x, pi)

    def run():
        qf, df = laplacian_factors(x, pi, signless=args.signless)
        report.add("quotient factor", _poly_payload(qf))
        report.add("deletion factor", _poly_payload(df))
        report.add("product", _poly_payload(qf * df))
        report.add("factored form", f"({qf.display()}) * ({df.display()})")
        return True

    report.check(f"{name} factorization product", run)
    return report


def cmd_zeta(args) -> Report:
    report = Report("zeta")
    x = _load_graph(args.graph)
    _echo_input(report, x)
    z = bartholdi_reciprocal(x)
    report.add("vertices / non-oriented edges", {"n": z.n_vertices, "m": z.n_edges})
    report.add("bartholdi reciprocal", _bipoly_payload(z.value))
    report.add("ihara reciprocal (u = 0)", _poly_payload(ihara_specialize(z), var="t"))
    report.check(
        "normalization Z^-1(u, 0) = 1",
        lambda: z.value.substitute_t(0) == UniPoly.one(),
    )
    return report


def cmd_zeta_factor(args) -> Report:
    report = Report("zeta-factor")
    x = _load_graph(args.graph)
    pi = _load_partition(args.partition, x.n, args.reps)
    _echo_input(report, x, pi)

    def run():
        s1_power, qf, df = zeta_factor(x, pi)
        report.add("s1 power", _bipoly_payload(s1_power))
        report.add("quotient factor", _bipoly_payload(qf))
        report.add("deletion factor", _bipoly_payload(df))
        report.add("product", _bipoly_payload(s1_power * qf * df))
        return True

    report.check("s1 power x quotient x deletion = zeta reciprocal", run)
    return report


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def cmd_join(args) -> Report:
    report = Report("join")
    h = _load_graph(args.pattern)
    components = [_load_graph(path) for path in args.components]
    spec = JoinSpec.of(h, components)
    report.add("pattern adjacency", _matrix_payload(h.adjacency))
    report.add("component sizes", {"sizes": list(spec.sizes)})

    graph, pi = build_join(spec)
    _echo_input(report, graph, pi)
    report.add(
        "join quotient", _matrix_payload(check_equitable(graph.adjacency, pi, graph.vertices))
    )

    alpha = _parse_fraction(args.alpha)
    if args.diag is None:
        dvals = [Fraction(0)] * spec.r
    else:
        dvals = [_parse_fraction(tok) for tok in args.diag.split(",")]

    def run_char():
        via_q, via_h, factors = join_char_poly(spec, alpha, dvals)
        report.add("char poly via quotient form", _poly_payload(via_q))
        report.add("char poly via H-determinant form", _poly_payload(via_h))
        for i, f in enumerate(factors):
            report.add(f"component factor {i + 1}", _poly_payload(f))
        return True

    report.check("join characteristic polynomial identities", run_char)

    if is_connected(graph):
        def run_zeta():
            via_q, via_h, gammas = join_zeta_reciprocal(spec)
            report.add("zeta reciprocal via quotient form", _bipoly_payload(via_q))
            report.add("zeta reciprocal via H-determinant form", _bipoly_payload(via_h))
            for i, g in enumerate(gammas):
                report.add(f"gamma {i + 1}", _bipoly_payload(g))
            return True

        report.check("join zeta identities", run_zeta)
    else:
        report.add("zeta", "skipped: join is disconnected")
    return report


def cmd_teranishi(args) -> Report:
    report = Report("teranishi")
    h = _load_graph(args.pattern)
    if len(args.pairs) % 2 != 0:
        raise ValueError("teranishi expects alternating component graph and partition files")
    components = []
    partitions = []
    for i in range(0, len(args.pairs), 2):
        comp = _load_graph(args.pairs[i])
        components.append(comp)
        partitions.append(_load_partition(args.pairs[i + 1], comp.n, None))
    spec = JoinSpec.of(h, components)
    report.add("pattern adjacency", _matrix_payload(h.adjacency))

    def run():
        qf, dfs = teranishi_factor(spec, partitions)
        report.add("quotient factor", _poly_payload(qf))
        for i, df in enumerate(dfs):
            report.add(f"component deletion factor {i + 1}", _poly_payload(df))
        return True

    report.check("per-component factorization product", run)
    return report


def cmd_verify(args) -> Report:
    report = Report("verify")
    x = _load_graph(args.graph)
    if args.partition is not None:
        pi = _load_partition(args.partition, x.n, args.reps)
    else:
        pi = _apply_reps(coarsest_equitable(x, _seed_partition(args.seed, x)), args.reps)
    _echo_input(report, x, pi)

    try:
        quotient = check_equitable(x.adjacency, pi, x.vertices)
    except NotEquitableError as err:
        report.verdict("partition is equitable", False, str(err))
        return report
    report.verdict("partition is equitable", True)
    report.add("quotient matrix", _matrix_payload(quotient))

    n, r = x.n, len(pi.cells)
    p = characteristic_matrix(pi, n, x.vertices)
    q = selector_matrix(pi, n, x.vertices)
    report.check("M P = P (M/pi)", lambda: x.adjacency @ p == p @ quotient)
    report.check(
        "(P, Q) basis is invertible",
        lambda: Matrix.hstack(p, q).inverse() is not None,
    )
    report.check(
        "similarity transform is block upper triangular",
        lambda: similarity_transform(x.adjacency, pi, x.vertices) is not None,
    )
    report.check(
        "deletion graph adjacency equals deletion matrix",
        lambda: deletion_graph(x, pi) is not None,
    )

    def factorization():
        qf, df = factor_char_poly(x.adjacency, pi, x.vertices)
        report.add("quotient factor", _poly_payload(qf))
        report.add("deletion factor", _poly_payload(df))
        return True

    report.check("characteristic polynomial factorization", factorization)

    def rep_independence():
        polys = set()
        for reps in itertools.product(*pi.cells):
            chosen = pi.with_representatives(reps)
            polys.add(char_poly(deletion_matrix(x.adjacency, chosen, x.vertices).matrix))
        return len(polys) == 1

    report.check("deletion factor independent of representatives", rep_independence)

    if is_undirected(x):
        report.check(
            "Laplacian factorization", lambda: laplacian_factors(x, pi) is not None
        )
        report.check(
            "signless Laplacian factorization",
            lambda: laplacian_factors(x, pi, signless=True) is not None,
        )
        if is_unsigned(x) and is_connected(x):
            z = bartholdi_reciprocal(x)
            report.add("bartholdi reciprocal", _bipoly_payload(z.value))
            report.check(
                "zeta normalization Z^-1(u, 0) = 1",
                lambda: z.value.substitute_t(0) == UniPoly.one(),
            )
            if edge_count(x) >= x.n:
                report.check(
                    "zeta factorization product", lambda: zeta_factor(x, pi) is not None
                )
            else:
                report.add("zeta factorization", "skipped: tree (negative s1 exponent)")
    return report


# -- argument parsing and dispatch -----------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equifactor",
        description="Exact quotient x deletion factorizations over equitable partitions.",
    )
    # accepted both before and after the subcommand; SUPPRESS keeps the
    # subparser from clobbering a --json given before the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="emit one JSON document",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, *, graph=True, partition=False, reps=True):
        p = sub.add_parser(name, help=help_text, parents=[common])
        if graph:
            p.add_argument("graph", help="graph file")
        if partition:
            p.add_argument("partition", help="partition file")
        if reps:
            p.add_argument("--reps", help="comma-separated representatives, one per cell")
        return p

    p = add("refine", "coarsest equitable refinement", reps=False)
    p.add_argument(
        "--seed",
        default="trivial",
        help="'trivial', 'singleton:<v>', or a partition file (default: trivial)",
    )
    add("quotient", "quotient matrix of an equitable pair", partition=True)
    add("delete", "deletion matrix and deletion graph", partition=True)
    add("factor", "characteristic polynomial factorization", partition=True)
    p = add("laplacian", "(signless) Laplacian factorization", partition=True)
    p.add_argument("--signless", action="store_true", help="use A + D instead of -A + D")
    add("zeta", "Bartholdi zeta reciprocal", reps=False)
    add("zeta-factor", "zeta reciprocal factorization", partition=True)

    p = sub.add_parser("join", help="generalized join identities", parents=[common])
    p.add_argument("pattern", help="pattern graph file (H)")
    p.add_argument("components", nargs="+", help="component graph files")
    p.add_argument("--alpha", default="1", help="scalar multiplier for A (default 1)")
    p.add_argument("--diag", help="comma-separated per-component diagonal values")

    p = sub.add_parser(
        "teranishi", help="per-component-partition join factorization", parents=[common]
    )
    p.add_argument("pattern", help="pattern graph file (H)")
    p.add_argument("pairs", nargs="+", help="component graph and partition files, alternating")

    p = add("verify", "run the full identity suite")
    p.add_argument("partition", nargs="?", help="partition file (default: auto-refine)")
    p.add_argument(
        "--seed",
        default="trivial",
        help="refinement seed when no partition file is given",
    )
    return parser


_HANDLERS = {
    "refine": cmd_refine,
    "quotient": cmd_quotient,
    "delete": cmd_delete,
    "factor": cmd_factor,
    "laplacian": cmd_laplacian,
    "zeta": cmd_zeta,
    "zeta-factor": cmd_zeta_factor,
    "join": cmd_join,
    "teranishi": cmd_teranishi,
    "verify": cmd_verify,
}


def run_command(argv: list[str]) -> int:
    """Parse argv, run the subcommand, print its report, return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = _HANDLERS[args.command](args)
    except (ParseError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except NotEquitableError as err:
        report = Report(args.command)
        report.verdict("partition is equitable", False, str(err))
        print(json.dumps(report.to_json(), indent=2) if args.json else report.to_text())
        return 1
    except (ValueError, ConsistencyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(json.dumps(report.to_json(), indent=2) if args.json else report.to_text())
    return 1 if report.failed else 0


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
