"""Line-oriented text format for multigraph records.

One graph per record:

    graph <name>
    n <order>
    e <u> <v> <mult>
    ...

Records end at a blank line or EOF; lines starting with `#` are comments.
"""

from __future__ import annotations

from typing import Iterable, List, Tuple

from .multigraph import Multigraph, MultigraphError


class ParseError(ValueError):
    pass


def serialize_graph(name: str, g: Multigraph) -> str:
    lines = [f"graph {name}", f"n {g.n}"]
    for (u, v), m in g.edge_items():
        lines.append(f"e {u} {v} {m}")
    return "\n".join(lines) + "\n"


def serialize_graphs(named: Iterable[Tuple[str, Multigraph]]) -> str:
    return "\n".join(serialize_graph(name, g) for name, g in named)


def parse_graphs(text: str) -> List[Tuple[str, Multigraph]]:
    out: List[Tuple[str, Multigraph]] = []
    name = None
    order = None
    edges: List[Tuple[int, int, int]] = []

    def flush(lineno: int) -> None:
        nonlocal name, order, edges
        if name is None and order is None and not edges:
            return
        if name is None:
            raise ParseError(f"line {lineno}: record without 'graph <name>' header")
        if order is None:
            raise ParseError(f"line {lineno}: record '{name}' without 'n <order>'")
        try:
            out.append((name, Multigraph.build(order, edges)))
        except MultigraphError as exc:
            raise ParseError(f"record '{name}': {exc}") from exc
        name, order, edges = None, None, []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush(lineno)
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "graph":
            if name is not None or order is not None or edges:
                flush(lineno)
            if len(parts) < 2:
                raise ParseError(f"line {lineno}: 'graph' without a name")
            name = " ".join(parts[1:])
        elif kind == "n":
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: malformed order line")
            try:
                order = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: order is not an integer")
        elif kind == "e":
            if len(parts) != 4:
                raise ParseError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v, m = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: edge fields must be integers")
            if u == v:
                raise ParseError(f"line {lineno}: loop edge ({u},{v}) rejected")
            if m < 1:
                raise ParseError(f"line {lineno}: multiplicity {m} rejected")
            edges.append((u, v, m))
        else:
            raise ParseError(f"line {lineno}: unknown directive {kind!r}")
    flush(-1)
    return out


def parse_one_graph(text: str) -> Tuple[str, Multigraph]:
    recs = parse_graphs(text)
    if len(recs) != 1:
        raise ParseError(f"expected exactly one graph record, found {len(recs)}")
    return recs[0]


def read_graphs(path: str) -> List[Tuple[str, Multigraph]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graphs(fh.read())


def write_graphs(path: str, named: Iterable[Tuple[str, Multigraph]]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graphs(named))
