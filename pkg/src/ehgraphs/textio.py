"""Line-oriented text format.

::

    g <n>          unordered graph        e <u> <v>   edge
    og <n>         ordered graph          e <u> <v>   edge (index order is the order)
    t <n>          tournament             a <u> <v>   arc u -> v, all C(n,2) required

``#`` starts a comment.  Several values may share one file; each starts
with its header line.
"""
from __future__ import annotations

import networkx as nx
import numpy as np

from .errors import InputError, ParseError
from .graph import Graph, OrderedGraph, Tournament

_HEADERS = {"g": Graph, "og": OrderedGraph, "t": Tournament}


def _tokens(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok, lineno):
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None
    return value


class _Block:
    def __init__(self, kind, n, lineno):
        self.kind, self.n, self.lineno = kind, n, lineno
        self.m = np.zeros((n, n), dtype=bool)
        self.seen = set()

    def add(self, directive, args, lineno):
        want = "a" if self.kind == "t" else "e"
        if directive != want:
            raise ParseError(f"unexpected directive {directive!r} in a {self.kind!r} block", lineno)
        if len(args) != 2:
            raise ParseError(f"{directive!r} takes two vertices", lineno)
        u, v = (_int(t, lineno) for t in args)
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ParseError(f"vertex out of range in {u} {v} (n={self.n})", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in self.seen:
            raise ParseError(f"duplicate pair {key[0]} {key[1]}", lineno)
        self.seen.add(key)
        self.m[u, v] = True
        if self.kind != "t":
            self.m[v, u] = True

    def build(self, last_line):
        if self.kind == "t":
            need = self.n * (self.n - 1) // 2
            if len(self.seen) != need:
                raise ParseError(
                    f"incomplete tournament: {len(self.seen)} of {need} arcs "
                    f"(block starting at line {self.lineno})",
                    last_line,
                )
            return Tournament(self.m)
        g = Graph(self.m)
        return OrderedGraph(g) if self.kind == "og" else g


def parse_many(text):
    """Parse every value in ``text``, in file order."""
    out = []
    block = None
    last = 0
    for lineno, toks in _tokens(text):
        last = lineno
        head, args = toks[0], toks[1:]
        if head in _HEADERS:
            if block is not None:
                out.append(block.build(lineno))
            if len(args) != 1:
                raise ParseError(f"{head!r} header takes the vertex count", lineno)
            n = _int(args[0], lineno)
            if n < 0:
                raise ParseError("negative vertex count", lineno)
            block = _Block(head, n, lineno)
        elif block is None:
            raise ParseError(f"{head!r} before any header", lineno)
        else:
            block.add(head, args, lineno)
    if block is not None:
        out.append(block.build(last))
    return out


def parse(text):
    values = parse_many(text)
    if len(values) != 1:
        raise ParseError(f"expected exactly one value, found {len(values)}")
    return values[0]


def serialize(value) -> str:
    if isinstance(value, Tournament):
        lines = [f"t {value.n}"]
        lines += [f"a {u} {v}" for u, v in value.arcs()]
    elif isinstance(value, OrderedGraph):
        lines = [f"og {value.n}"] + [f"e {u} {v}" for u, v in value.edges()]
    elif isinstance(value, Graph):
        lines = [f"g {value.n}"] + [f"e {u} {v}" for u, v in value.edges()]
    else:
        raise InputError(f"cannot serialize {type(value).__name__}")
    return "\n".join(lines) + "\n"


def serialize_many(values) -> str:
    return "\n".join(serialize(v) for v in values)


def read(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if str(path).endswith(".g6") or text.lstrip().startswith(">>graph6<<"):
        return from_graph6(text.strip())
    return parse(text)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        g = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise ParseError(f"bad graph6 string: {exc}") from None
    a = nx.to_numpy_array(g, nodelist=range(g.number_of_nodes()), dtype=bool)
    return Graph(a)


def to_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()
