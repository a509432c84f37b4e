"""Clique-immersion certificates: data model, verifier and split-off executor.

A certificate for a K_t-immersion in a host graph lists ``t`` distinct
terminal vertices and, for every pair of terminal indices ``a < b``, a simple
path in the host from ``terminals[a]`` to ``terminals[b]``. The paths must be
pairwise edge-disjoint; they may pass through terminals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .errors import InputError, PreconditionError
from .graph import Edge, Graph, Multigraph, norm_edge

Pair = tuple[int, int]


@dataclass(frozen=True)
class ImmersionCertificate:
    t: int
    terminals: tuple[int, ...]
    paths: Mapping[Pair, tuple[int, ...]]

    @classmethod
    def build(cls, terminals: Sequence[int], paths: Mapping[Pair, Sequence[int]]) -> ImmersionCertificate:
        """Normalize path keys to ``a < b`` (reversing the path when needed)."""
        norm: dict[Pair, tuple[int, ...]] = {}
        for (a, b), p in paths.items():
            if a == b:
                raise InputError(f"path key {a}-{b} joins a terminal to itself")
            key, seq = ((a, b), tuple(p)) if a < b else ((b, a), tuple(reversed(p)))
            if key in norm:
                raise InputError(f"duplicate path for pair {key[0]}-{key[1]}")
            norm[key] = seq
        return cls(len(terminals), tuple(terminals), dict(sorted(norm.items())))

    def pairs(self) -> list[Pair]:
        return list(combinations(range(self.t), 2))

    def path_edges(self, key: Pair) -> list[Edge]:
        p = self.paths[key]
        return [norm_edge(p[k], p[k + 1]) for k in range(len(p) - 1)]

    def used_edges(self) -> list[Edge]:
        return [e for key in self.paths for e in self.path_edges(key)]

    def pegs(self) -> set[int]:
        return {x for p in self.paths.values() for x in p[1:-1]}

    def vertices(self) -> set[int]:
        return set(self.terminals) | {x for p in self.paths.values() for x in p}

    def restrict(self, keep: Sequence[int]) -> ImmersionCertificate:
        """Sub-certificate on the terminal indices ``keep`` (a K_s-immersion, s = len(keep))."""
        keep = list(keep)
        paths = {}
        for a, b in combinations(range(len(keep)), 2):
            i, j = keep[a], keep[b]
            if i < j:
                paths[(a, b)] = self.paths[(i, j)]
            else:
                paths[(a, b)] = tuple(reversed(self.paths[(j, i)]))
        return ImmersionCertificate(len(keep), tuple(self.terminals[i] for i in keep), paths)

    def relabel(self, mapping: Callable[[int], int]) -> ImmersionCertificate:
        return ImmersionCertificate(
            self.t, tuple(mapping(x) for x in self.terminals),
            {k: tuple(mapping(x) for x in p) for k, p in self.paths.items()})

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "terminals": list(self.terminals),
            "paths": {f"{a}-{b}": list(p) for (a, b), p in sorted(self.paths.items())},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> ImmersionCertificate:
        try:
            terminals = [int(x) for x in data["terminals"]]
            paths = {}
            for key, seq in data["paths"].items():
                a, b = (int(x) for x in key.split("-"))
                paths[(a, b)] = [int(x) for x in seq]
            t = int(data.get("t", len(terminals)))
        except (KeyError, ValueError, TypeError, AttributeError) as exc:
            raise InputError(f"malformed certificate JSON: {exc!r}") from exc
        if t != len(terminals):
            raise InputError(f"t={t} but {len(terminals)} terminals listed")
        return cls.build(terminals, paths)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    def render(self, label: Callable[[int], str] = str) -> str:
        lines = [f"K_{self.t} immersion, terminals: " + ", ".join(label(x) for x in self.terminals)]
        for (a, b), p in sorted(self.paths.items()):
            lines.append(f"  {a}-{b}: " + " - ".join(label(x) for x in p))
        return "\n".join(lines)


@dataclass(frozen=True)
class Violation:
    kind: str  # duplicate_terminal | missing_path | extra_path | endpoint_mismatch | non_edge | repeated_vertex | edge_reuse
    detail: str
    paths: tuple[Pair, ...] = ()
    edge: Edge | None = None
    vertex: int | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "detail": self.detail}
        if self.paths:
            out["paths"] = [f"{a}-{b}" for a, b in self.paths]
        if self.edge is not None:
            out["edge"] = list(self.edge)
        if self.vertex is not None:
            out["vertex"] = self.vertex
        return out


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def kinds(self) -> list[str]:
        return [v.kind for v in self.violations]

    def to_json(self) -> dict:
        return {"valid": self.valid, "violations": [v.to_json() for v in self.violations]}


def _check_range(g: Graph, cert: ImmersionCertificate) -> None:
    if cert.t != len(cert.terminals):
        raise InputError(f"t={cert.t} but {len(cert.terminals)} terminals")
    for x in cert.terminals:
        if not 0 <= x < g.n:
            raise InputError(f"terminal {x} outside host vertices 0..{g.n - 1}")
    for (a, b), p in cert.paths.items():
        if not (0 <= a < b < cert.t):
            raise InputError(f"path key {a}-{b} is not a terminal-index pair below t={cert.t}")
        if not p:
            raise InputError(f"path {a}-{b} is empty")
        for x in p:
            if not 0 <= x < g.n:
                raise InputError(f"path {a}-{b} visits {x}, outside host vertices 0..{g.n - 1}")


def verify_certificate(g: Graph, cert: ImmersionCertificate) -> VerificationReport:
    """Check a certificate against ``g`` and report every violation found.

    Raises :class:`InputError` for ids outside the host; everything else is a
    verdict in the returned report.
    """
    _check_range(g, cert)
    found: list[Violation] = []

    seen_term: dict[int, int] = {}
    for i, x in enumerate(cert.terminals):
        if x in seen_term:
            found.append(Violation("duplicate_terminal",
                                   f"terminals {seen_term[x]} and {i} are both vertex {x}", vertex=x))
        else:
            seen_term[x] = i

    expected = set(cert.pairs())
    for key in sorted(expected - set(cert.paths)):
        found.append(Violation("missing_path", f"no path for pair {key[0]}-{key[1]}", paths=(key,)))

    owner: dict[Edge, Pair] = {}
    for key in sorted(cert.paths):
        a, b = key
        p = cert.paths[key]
        if key not in expected:
            found.append(Violation("extra_path", f"unexpected path key {a}-{b}", paths=(key,)))
            continue
        if p[0] != cert.terminals[a] or p[-1] != cert.terminals[b]:
            found.append(Violation(
                "endpoint_mismatch",
                f"path {a}-{b} runs {p[0]}..{p[-1]}, expected {cert.terminals[a]}..{cert.terminals[b]}",
                paths=(key,)))
        visited: set[int] = set()
        for x in p:
            if x in visited:
                found.append(Violation("repeated_vertex", f"path {a}-{b} revisits vertex {x}",
                                       paths=(key,), vertex=x))
            visited.add(x)
        for u, v in zip(p, p[1:]):
            if u == v or not g.has_edge(u, v):
                found.append(Violation("non_edge", f"path {a}-{b} steps {u}-{v}, not a host edge",
                                       paths=(key,), edge=norm_edge(u, v) if u != v else (u, v)))
                continue
            e = norm_edge(u, v)
            if e in owner:
                found.append(Violation("edge_reuse", f"edge {e} used by paths "
                                       f"{owner[e][0]}-{owner[e][1]} and {a}-{b}",
                                       paths=(owner[e], key), edge=e))
            else:
                owner[e] = key
    return VerificationReport(tuple(found))


def trivial_clique_certificate(g: Graph, terminals: Sequence[int]) -> ImmersionCertificate:
    """Certificate whose paths are single edges between pairwise adjacent terminals."""
    terminals = list(terminals)
    for x in terminals:
        if not 0 <= x < g.n:
            raise InputError(f"terminal {x} outside host vertices 0..{g.n - 1}")
    if len(set(terminals)) != len(terminals):
        raise PreconditionError("terminals must be distinct")
    paths = {}
    for a, b in combinations(range(len(terminals)), 2):
        u, v = terminals[a], terminals[b]
        if not g.has_edge(u, v):
            raise PreconditionError(f"terminals {u} and {v} are not adjacent")
        paths[(a, b)] = (u, v)
    return ImmersionCertificate(len(terminals), tuple(terminals), paths)


def realize_by_splitting(g: Graph, cert: ImmersionCertificate) -> Multigraph:
    """Split off every certificate path down to one edge between its terminals.

    Paths are processed in key order, each contracted from its first vertex
    inward. Isolated vertices are left in place.
    """
    report = verify_certificate(g, cert)
    if not report.valid:
        raise InputError(f"certificate is invalid: {report.violations[0].detail}")
    mg = Multigraph.from_graph(g)
    for key in sorted(cert.paths):
        p = cert.paths[key]
        head = p[0]
        for k in range(1, len(p) - 1):
            mg.split_off(head, p[k], p[k + 1])
    return mg


def contains_clique_on(mg: Multigraph, terminals: Iterable[int]) -> bool:
    return all(mg.multiplicity(u, v) >= 1 for u, v in combinations(list(terminals), 2))


def load_certificate(path) -> ImmersionCertificate:
    with open(path) as fh:
        return ImmersionCertificate.from_json(json.load(fh))
