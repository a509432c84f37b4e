"""Generalized Mycielski graphs.

``mycielskian(G, m)`` stacks ``m`` levels over ``V(G)``: level 0 carries a
copy of ``G``, consecutive levels are joined by the "shadow" edges
``(u, i) - (v, i+1)`` for every edge ``uv``, and one apex is joined to all of
level ``m-1``. Vertex ``(v, i)`` gets index ``i*n + v`` and the apex gets
``m*n``.

``cone_crosscheck`` rebuilds the same graph as a quotient of a direct
product, which makes it an independent check on the direct enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import InputError, ParameterError
from .graph import Graph, emit_graph6, norm_edge


@dataclass(frozen=True)
class MycVertex:
    """A vertex of the m-Mycielskian: ``(v, level)`` or the apex (both fields None)."""

    v: int | None = None
    level: int | None = None

    @property
    def is_apex(self) -> bool:
        return self.v is None

    def label(self) -> str:
        # base vertices are shown 1-based, as v1..vn
        return "w" if self.is_apex else f"(v{self.v + 1},{self.level})"


APEX = MycVertex()


@dataclass(frozen=True)
class MycGraph:
    base: Graph
    m: int
    graph: Graph

    @property
    def base_n(self) -> int:
        return self.base.n

    @property
    def apex(self) -> int:
        return self.m * self.base.n

    def index(self, v: int, level: int) -> int:
        if not (0 <= v < self.base.n and 0 <= level < self.m):
            raise InputError(f"no vertex ({v}, {level}) in mu_{self.m} of an {self.base.n}-vertex graph")
        return level * self.base.n + v

    def index_of(self, x: MycVertex) -> int:
        if x.is_apex:
            return self.apex
        assert x.v is not None and x.level is not None
        return self.index(x.v, x.level)

    def vertex_of(self, idx: int) -> MycVertex:
        if idx == self.apex:
            return APEX
        if not 0 <= idx < self.apex:
            raise InputError(f"index {idx} outside 0..{self.apex}")
        level, v = divmod(idx, self.base.n)
        return MycVertex(v, level)

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.vertex_of(i).label() for i in range(self.graph.n))

    def label(self, idx: int) -> str:
        return self.labels[idx]

    def to_json(self) -> dict:
        out = self.graph.to_json()
        out["labels"] = list(self.labels)
        out["m"] = self.m
        out["base_n"] = self.base.n
        return out

    def to_graph6(self) -> str:
        return emit_graph6(self.graph)


def _check_m(m: int) -> None:
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")


def mycielskian(g: Graph, m: int) -> MycGraph:
    """Return the m-Mycielskian of ``g`` under the canonical index map."""
    _check_m(m)
    n = g.n
    edges: set[tuple[int, int]] = set()
    for u, v in g.edges:
        edges.add(norm_edge(u, v))
        for i in range(m - 1):
            edges.add(norm_edge(i * n + u, (i + 1) * n + v))
            edges.add(norm_edge(i * n + v, (i + 1) * n + u))
    apex = m * n
    for u in range(n):
        edges.add(((m - 1) * n + u, apex))
    graph = Graph(m * n + 1, frozenset(edges))
    labels = MycGraph(g, m, graph).labels
    return MycGraph(g, m, Graph(graph.n, graph.edges, labels))


def looped_path(m: int) -> tuple[int, set[tuple[int, int]]]:
    """The path on ``0..m`` with a loop at 0, as (vertex count, edge set incl. (0, 0))."""
    edges = {(i, i + 1) for i in range(m)}
    edges.add((0, 0))
    return m + 1, edges


def cone_crosscheck(g: Graph, m: int) -> Graph:
    """Build the cone over ``g``: direct product with a looped path, top layer collapsed.

    The result uses the same index map as :func:`mycielskian`. An isolated
    vertex of ``g`` has no product edges, so its top copy is not joined to the
    apex here; the two constructions agree exactly when ``g`` has no isolated
    vertices.
    """
    _check_m(m)
    n = g.n
    _, path_edges = looped_path(m)
    # direct product: (u,a)~(v,b) iff u~v in g and a~b in the looped path
    arcs_g = [(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges]
    arcs_p = set(path_edges) | {(b, a) for a, b in path_edges}

    def collapse(v: int, a: int) -> int:
        return m * n if a == m else a * n + v

    edges: set[tuple[int, int]] = set()
    for (u, v), (a, b) in product(arcs_g, arcs_p):
        x, y = collapse(u, a), collapse(v, b)
        if x != y:
            edges.add(norm_edge(x, y))
    return Graph(m * n + 1, frozenset(edges))
