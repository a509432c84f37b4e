"""Distinct neighbor property (DNP) for clique immersions.

An immersion has the DNP when every terminal can be given its own neighbor,
with all chosen neighbors distinct. That is a bipartite matching question
between the terminals and their neighborhood. When no saturating matching
exists, the terminals all share one neighborhood of size ``t-1`` and
:func:`ensure_dnp` rebuilds the immersion on that neighborhood instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .certificate import ImmersionCertificate, verify_certificate
from .errors import ConsistencyError, InputError
from .graph import Graph


@dataclass(frozen=True)
class NeighborAssignment:
    """``assignment[i]`` is the distinct neighbor chosen for terminal ``i``."""

    assignment: Mapping[int, int]

    def __getitem__(self, i: int) -> int:
        return self.assignment[i]

    def __len__(self) -> int:
        return len(self.assignment)

    def is_valid_for(self, g: Graph, cert: ImmersionCertificate) -> bool:
        if sorted(self.assignment) != list(range(cert.t)):
            return False
        chosen = list(self.assignment.values())
        if len(set(chosen)) != len(chosen):
            return False
        return all(0 <= f < g.n and g.has_edge(cert.terminals[i], f)
                   for i, f in self.assignment.items())

    def to_json(self) -> dict:
        return {"assignment": {str(i): v for i, v in sorted(self.assignment.items())}}

    @classmethod
    def from_json(cls, data: Mapping) -> NeighborAssignment:
        try:
            return cls({int(k): int(v) for k, v in data["assignment"].items()})
        except (KeyError, ValueError, TypeError, AttributeError) as exc:
            raise InputError(f"malformed assignment JSON: {exc!r}") from exc


@dataclass(frozen=True)
class DnpBipartite:
    """Terminals (left) against every host vertex adjacent to some terminal (right)."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    adj: tuple[tuple[int, ...], ...]  # adj[i]: right vertices adjacent to left[i], ascending

    @classmethod
    def from_certificate(cls, g: Graph, cert: ImmersionCertificate) -> DnpBipartite:
        adj = tuple(g.adjacency[a] for a in cert.terminals)
        right = tuple(sorted({b for nb in adj for b in nb}))
        return cls(tuple(cert.terminals), right, adj)


@dataclass(frozen=True)
class EdgeColoring:
    order: int
    color: Mapping[tuple[int, int], int]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return self.color[(i, j) if i < j else (j, i)]

    def colors_used(self) -> set[int]:
        return set(self.color.values())

    def is_proper(self) -> bool:
        at_vertex: dict[tuple[int, int], tuple[int, int]] = {}
        for (i, j), c in self.color.items():
            for x in (i, j):
                if (x, c) in at_vertex:
                    return False
                at_vertex[(x, c)] = (i, j)
        return True


def max_matching(bip: DnpBipartite) -> dict[int, int]:
    """Maximum matching by augmenting paths, as ``{left index: right vertex}``.

    Left vertices are tried in order and neighbors in ascending order, so the
    result is reproducible.
    """
    match_right: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for b in bip.adj[i]:
            if b in seen:
                continue
            seen.add(b)
            if b not in match_right or augment(match_right[b], seen):
                match_right[b] = i
                return True
        return False

    for i in range(len(bip.left)):
        augment(i, set())
    return dict(sorted((i, b) for b, i in match_right.items()))


def _require_valid(g: Graph, cert: ImmersionCertificate) -> None:
    report = verify_certificate(g, cert)
    if not report.valid:
        raise InputError(f"certificate is invalid: {report.violations[0].detail}")


def check_dnp(g: Graph, cert: ImmersionCertificate) -> NeighborAssignment | None:
    """Return a distinct-neighbor assignment, or ``None`` when the property fails."""
    _require_valid(g, cert)
    matching = max_matching(DnpBipartite.from_certificate(g, cert))
    if len(matching) < cert.t:
        return None
    return NeighborAssignment(matching)


def proper_edge_coloring_complete(n: int) -> EdgeColoring:
    """Proper edge coloring of K_n with at most ``n`` colors.

    Odd ``n`` uses ``(i + j) mod n``. Even ``n`` colors the rim ``0..n-2`` with
    ``(i + j) mod (n-1)`` and joins rim vertex ``i`` to the hub ``n-1`` in the
    one color missing at ``i``, namely ``2i mod (n-1)``.
    """
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    color: dict[tuple[int, int], int] = {}
    if n % 2 == 1:
        for i, j in combinations(range(n), 2):
            color[(i, j)] = (i + j) % n
    else:
        k = n - 1
        for i, j in combinations(range(k), 2):
            color[(i, j)] = (i + j) % k
        for i in range(k):
            color[(i, k)] = (2 * i) % k
    return EdgeColoring(n, color)


def hall_failure_structure(g: Graph, cert: ImmersionCertificate) -> tuple[int, ...]:
    """Assert what a failed saturating matching forces and return the common neighborhood.

    Every terminal has at least ``t-1`` neighbors, so a Hall violator can only
    exist when all terminals see the same ``t-1`` vertices, none of them a
    terminal.
    """
    bip = DnpBipartite.from_certificate(g, cert)
    t = cert.t
    if len(bip.right) != t - 1:
        raise ConsistencyError(f"no DNP but |B| = {len(bip.right)}, expected {t - 1}")
    for a, nb in zip(bip.left, bip.adj):
        if nb != bip.right:
            raise ConsistencyError(f"no DNP but terminal {a} does not see all of B")
    if set(bip.right) & set(bip.left):
        raise ConsistencyError("no DNP but a terminal lies in the common neighborhood")
    return bip.right


def ensure_dnp(g: Graph, cert: ImmersionCertificate) -> tuple[ImmersionCertificate, NeighborAssignment]:
    """Return a K_t certificate in ``g`` that has the DNP, with its assignment.

    A certificate that already has the property comes back unchanged.
    Otherwise the terminals become the common neighbors ``b_1..b_{t-1}`` plus
    the last old terminal ``a_t``. Each ``b_i`` reaches ``a_t`` by a direct edge,
    and ``b_i``, ``b_j`` are joined through the old terminal ``a_k`` whose index
    ``k`` is the color of ``{i, j}`` in a proper edge coloring of K_{t-1}.
    """
    if cert.t < 2:
        raise InputError("ensure_dnp needs t >= 2")
    found = check_dnp(g, cert)
    if found is not None:
        return cert, found

    b = hall_failure_structure(g, cert)
    a = cert.terminals
    t = cert.t
    coloring = proper_edge_coloring_complete(t - 1)
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for i, j in combinations(range(t - 1), 2):
        paths[(i, j)] = (b[i], a[coloring[(i, j)]], b[j])
    for i in range(t - 1):
        paths[(i, t - 1)] = (b[i], a[t - 1])
    rebuilt = ImmersionCertificate(t, tuple(b) + (a[t - 1],), paths)

    report = verify_certificate(g, rebuilt)
    if not report.valid:
        raise ConsistencyError(f"rebuilt certificate is invalid: {report.violations[0].detail}")
    assignment = {i: a[i] for i in range(t - 1)}
    assignment[t - 1] = b[0]
    result = NeighborAssignment(assignment)
    if not result.is_valid_for(g, rebuilt):
        raise ConsistencyError("rebuilt assignment is not a distinct-neighbor assignment")
    return rebuilt, result
