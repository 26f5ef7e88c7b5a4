"""Plain-text graph files and DOT rendering.

File format: a header line ``n m``, then m lines ``u v`` with
``0 <= u < v < n``; lines starting with ``#`` are comments; UTF-8 with LF
endings.  Parsing errors carry the offending line number and a distinct
message per defect.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import Graph
from .treerep import BaseTree, TreeRepresentation


def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped))
    if not rows:
        raise ParseError("line 1: missing header line 'n m'")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: malformed header; expected 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: malformed header; expected two integers") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: header counts must be non-negative")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(
            f"header announces {m} edges but the file has {len(body)} edge lines"
        )
    edges = set()
    for lineno, row in body:
        parts = row.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: malformed edge; expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: malformed edge; expected two integers") from None
        if u == v:
            raise ParseError(f"line {lineno}: self-loop {u} {v} is not allowed")
        if not 0 <= u < v:
            raise ParseError(f"line {lineno}: endpoints must satisfy 0 <= u < v")
        if v >= n:
            raise ParseError(f"line {lineno}: vertex {v} out of range 0..{n - 1}")
        if (u, v) in edges:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def render_graph(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def graph_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    for v in sorted(g.loops):
        lines.append(f"  {v} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def clique_tree_dot(rep: TreeRepresentation) -> str:
    lines = ["graph cliquetree {"]
    for i, clique in enumerate(rep.cliques):
        label = "{" + ",".join(str(v) for v in clique) + "}"
        lines.append(f'  {i} [label="{label}"];')
    for u, v in sorted(rep.t0.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def base_tree_dot(base: BaseTree) -> str:
    lines = ["graph basetree {"]
    for i, t0_node in enumerate(base.subst_map):
        lines.append(f'  {i} [label="{i} (clique {t0_node})"];')
    for u, v in sorted(base.tree.edges):
        colour = base.colours[(u, v)]
        lines.append(f'  {u} -- {v} [color={colour}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
