"""Simple undirected graphs over dense integer vertices.

Vertices are always ``0..n-1``. A :class:`Graph` is immutable once built, so
it can be shared freely between worker processes. Parallel edges only exist
in :class:`Multigraph`, which the split-off executor uses.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import Graph6ParseError, InputError, ParameterError

Edge = tuple[int, int]

GRAPH6_MAX_N = 62
GRAPH6_HEADER = ">>graph6<<"

FAMILY_KINDS = ("path", "cycle", "complete", "complete_bipartite", "circulant")


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``labels`` are display strings only; they take no part in equality.
    """

    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise InputError(f"edge ({u}, {v}) is not a normalized pair below n={self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError(f"{len(self.labels)} labels given for {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   labels: Sequence[str] | None = None) -> Graph:
        """Build a graph, normalizing pairs and rejecting loops and duplicates."""
        seen: set[Edge] = set()
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = norm_edge(u, v)
            if e in seen:
                raise InputError(f"parallel edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen), tuple(labels) if labels is not None else None)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples, indexed by vertex."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_subgraph_of(self, other: Graph) -> bool:
        """True when this graph's edges are all edges of ``other`` (same vertex ids)."""
        return self.n <= other.n and self.edges <= other.edges

    def to_json(self) -> dict:
        out: dict = {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        try:
            return cls.from_edges(int(data["n"]), data["edges"], data.get("labels"))
        except (KeyError, TypeError, IndexError) as exc:
            raise InputError(f"malformed JSON graph: {exc!r}") from exc


@dataclass
class Multigraph:
    """Undirected multigraph; ``edges`` maps a normalized pair to its multiplicity."""

    n: int
    edges: Counter = field(default_factory=Counter)

    @classmethod
    def from_graph(cls, g: Graph) -> Multigraph:
        return cls(g.n, Counter({e: 1 for e in g.edges}))

    def multiplicity(self, u: int, v: int) -> int:
        return self.edges.get(norm_edge(u, v), 0)

    def total_edges(self) -> int:
        return sum(self.edges.values())

    def remove_edge(self, u: int, v: int) -> None:
        e = norm_edge(u, v)
        if self.edges.get(e, 0) < 1:
            raise InputError(f"edge {e} is not present")
        self.edges[e] -= 1
        if self.edges[e] == 0:
            del self.edges[e]

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        self.edges[norm_edge(u, v)] += 1

    def split_off(self, u: int, v: int, w: int) -> None:
        """Replace edges ``uv`` and ``vw`` by the edge ``uw``."""
        if u == w:
            raise InputError("split-off would create a loop")
        self.remove_edge(u, v)
        self.remove_edge(v, w)
        self.add_edge(u, w)

    def isolated_vertices(self) -> list[int]:
        touched = {x for e in self.edges for x in e}
        return [v for v in range(self.n) if v not in touched]


@dataclass(frozen=True)
class FamilySpec:
    """Names a standard graph family.

    ``n`` is the vertex count (path, cycle, complete, circulant) or the first
    side of a complete bipartite graph, whose second side is ``n2``.
    """

    kind: str
    n: int
    n2: int | None = None
    jumps: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ParameterError(f"unknown family {self.kind!r}; expected one of {FAMILY_KINDS}")
        minimum = {"path": 1, "cycle": 3, "complete": 1, "complete_bipartite": 0, "circulant": 1}
        if self.n < minimum[self.kind]:
            raise ParameterError(f"{self.kind} needs n >= {minimum[self.kind]}, got {self.n}")
        if self.kind == "complete_bipartite" and (self.n2 is None or self.n2 < 0):
            raise ParameterError("complete_bipartite needs a second side size n2 >= 0")
        if self.kind == "circulant":
            if not self.jumps:
                raise ParameterError("circulant needs a non-empty jump set")
            for j in self.jumps:
                if j % self.n == 0:
                    raise ParameterError(f"jump {j} is a multiple of n={self.n} and would give loops")

    def name(self) -> str:
        if self.kind == "complete_bipartite":
            return f"K_{{{self.n},{self.n2}}}"
        if self.kind == "circulant":
            return f"C_{self.n}({','.join(map(str, self.jumps))})"
        return {"path": "P", "cycle": "C", "complete": "K"}[self.kind] + f"_{self.n}"


def generate_family(spec: FamilySpec) -> Graph:
    n = spec.n
    if spec.kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
        total = n
    elif spec.kind == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)]
        total = n
    elif spec.kind == "complete":
        edges = list(combinations(range(n), 2))
        total = n
    elif spec.kind == "complete_bipartite":
        assert spec.n2 is not None
        edges = [(i, n + j) for i in range(n) for j in range(spec.n2)]
        total = n + spec.n2
    else:
        edges = {norm_edge(i, (i + j) % n) for i in range(n) for j in spec.jumps}
        total = n
    return Graph(total, frozenset(norm_edge(u, v) for u, v in edges))


def path_graph(n: int) -> Graph:
    return generate_family(FamilySpec("path", n))


def cycle_graph(n: int) -> Graph:
    return generate_family(FamilySpec("cycle", n))


def complete_graph(n: int) -> Graph:
    return generate_family(FamilySpec("complete", n))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return generate_family(FamilySpec("complete_bipartite", a, b))


def circulant_graph(n: int, jumps: Iterable[int]) -> Graph:
    return generate_family(FamilySpec("circulant", n, jumps=tuple(jumps)))


def degree_histogram(g: Graph) -> dict[int, int]:
    return dict(sorted(Counter(g.degrees()).items()))


# graph6 (short form only)

def emit_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ParameterError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        chars.append(chr(63 + value))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        s = s[base:]
    if not s:
        raise Graph6ParseError("empty graph6 string", base)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"byte {ch!r} outside graph6 range 63..126", base + k)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6ParseError(f"long-form graph6 (n > {GRAPH6_MAX_N}) is not supported", base)
    nbits = n * (n - 1) // 2
    expected = 1 + -(-nbits // 6)
    if len(s) != expected:
        raise Graph6ParseError(f"expected {expected} bytes for n={n}, got {len(s)}",
                               base + min(len(s), expected))
    bits: list[int] = []
    for ch in s[1:]:
        value = ord(ch) - 63
        bits.extend((value >> (5 - b)) & 1 for b in range(6))
    if any(bits[nbits:]):
        raise Graph6ParseError("non-zero padding bits", base + len(s) - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def loads_graph(text: str) -> Graph:
    """Read a graph from graph6 or JSON text, chosen by the first non-blank byte."""
    s = text.strip()
    if s.startswith("{"):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON graph: {exc}") from exc
        return Graph.from_json(data)
    first = s.splitlines()[0] if s else ""
    return parse_graph6(first)
