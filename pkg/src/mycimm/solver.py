"""Exact clique-immersion search and immersion numbers for small graphs.

``has_kt_immersion`` enumerates terminal sets among vertices of degree at
least ``t-1`` and, for each, tries to pack the ``C(t,2)`` edge-disjoint paths
by depth-first search. Only sound pruning is used, so a ``"none"`` answer is a
proof. All work is counted in search nodes, which makes the budget
deterministic and machine independent.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, islice
from typing import Iterable, Iterator, Sequence

from .certificate import ImmersionCertificate, trivial_clique_certificate, verify_certificate
from .errors import ConsistencyError, InputError
from .graph import Graph, complete_graph, degree_histogram
from .lift import lift_immersion
from .mycielski import mycielskian

FOUND, NONE, EXHAUSTED = "found", "none", "exhausted"
EXACT, BUDGET_EXHAUSTED = "exact", "budget_exhausted"

MAX_AUTOMORPHISMS = 200


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 1_000_000

    def __post_init__(self):
        if self.max_nodes < 1:
            raise InputError(f"budget must allow at least one node, got {self.max_nodes}")


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # found | none | exhausted
    certificate: ImmersionCertificate | None = None
    nodes_used: int = 0


@dataclass
class SolveResult:
    lower: int
    upper: int
    certificate: ImmersionCertificate | None
    status: str
    nodes_used: int = 0

    @property
    def exact(self) -> bool:
        return self.status == EXACT

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "status": self.status,
            "certificate": self.certificate.to_json() if self.certificate is not None else None,
            "nodes_used": self.nodes_used,
        }


def degree_upper_bound(g: Graph) -> int:
    """Largest ``t`` with at least ``t`` vertices of degree ``>= t-1``."""
    if g.n < 1:
        raise InputError("graph has no vertices")
    degs = sorted(g.degrees(), reverse=True)
    best = 1
    for t in range(1, g.n + 1):
        if degs[t - 1] >= t - 1:
            best = t
    return best


# path packing

class _Exhausted(Exception):
    pass


class _Packer:
    """Routes every terminal pair along edge-disjoint simple paths, or proves it impossible."""

    def __init__(self, adj: Sequence[Sequence[tuple[int, int]]], n_edges: int,
                 terminals: Sequence[int], cap: int):
        self.adj = adj
        self.n = len(adj)
        self.terms = list(terminals)
        self.t = len(terminals)
        self.term_index = {x: i for i, x in enumerate(terminals)}
        self.used = [False] * n_edges
        self.rdeg = [len(a) for a in adj]
        self.free = n_edges
        self.need = [self.t - 1] * self.t
        self.unrouted = set(combinations(range(self.t), 2))
        self.paths: dict[tuple[int, int], tuple[int, ...]] = {}
        self.cap = cap
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.cap:
            raise _Exhausted

    def bfs(self, src: int) -> list[int]:
        dist = [-1] * self.n
        dist[src] = 0
        queue = deque([src])
        adj, used = self.adj, self.used
        while queue:
            x = queue.popleft()
            for y, e in adj[x]:
                if dist[y] < 0 and not used[e]:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def overloaded(self, x: int) -> bool:
        i = self.term_index.get(x)
        return i is not None and self.need[i] > self.rdeg[x]

    def solve(self) -> bool:
        if not self.unrouted:
            return True
        self.tick()
        terms, need, rdeg = self.terms, self.need, self.rdeg
        for i, x in enumerate(terms):
            if need[i] > rdeg[x]:
                return False
        dists = {i: self.bfs(terms[i]) for i in range(self.t) if need[i] > 0}
        total = 0
        best = None
        for a, b in self.unrouted:
            d = dists[a][terms[b]]
            if d < 0:
                return False
            total += d
            slack = min(rdeg[terms[a]] - need[a], rdeg[terms[b]] - need[b])
            key = (slack, -d, a, b)
            if best is None or key < best:
                best = key
        if total > self.free:
            return False
        assert best is not None
        _, neg_d, a, b = best
        src, dst = terms[a], terms[b]
        to_dst = dists[b]
        reach = sum(1 for x in to_dst if x >= 0)

        self.unrouted.discard((a, b))
        need[a] -= 1
        need[b] -= 1
        for length in range(-neg_d, reach):
            if self._extend(src, dst, [src], {src}, length, to_dst, (a, b)):
                return True
        need[a] += 1
        need[b] += 1
        self.unrouted.add((a, b))
        return False

    def _extend(self, x: int, dst: int, path: list[int], visited: set[int], remaining: int,
                to_dst: list[int], key: tuple[int, int]) -> bool:
        if x == dst:
            self.paths[key] = tuple(path)
            if self.solve():
                return True
            del self.paths[key]
            return False
        used, rdeg = self.used, self.rdeg
        for y, e in self.adj[x]:
            if used[e] or y in visited:
                continue
            dy = to_dst[y]
            if dy < 0 or dy > remaining - 1 or (y == dst) != (remaining == 1):
                continue
            self.tick()
            used[e] = True
            rdeg[x] -= 1
            rdeg[y] -= 1
            self.free -= 1
            if not (self.overloaded(x) or self.overloaded(y)):
                path.append(y)
                visited.add(y)
                if self._extend(y, dst, path, visited, remaining - 1, to_dst, key):
                    return True
                visited.discard(y)
                path.pop()
            used[e] = False
            rdeg[x] += 1
            rdeg[y] += 1
            self.free += 1
        return False


def _edge_indexed_adjacency(g: Graph) -> tuple[list[list[tuple[int, int]]], int]:
    ids = {e: k for k, e in enumerate(g.sorted_edges())}
    adj = [[(y, ids[(min(x, y), max(x, y))]) for y in g.adjacency[x]] for x in range(g.n)]
    return adj, len(ids)


def pack_paths(adj: Sequence[Sequence[tuple[int, int]]], n_edges: int, terminals: Sequence[int],
               cap: int) -> tuple[str, dict | None, int]:
    """Search one terminal set; returns (status, paths or None, nodes used)."""
    packer = _Packer(adj, n_edges, terminals, cap)
    try:
        ok = packer.solve()
    except _Exhausted:
        return EXHAUSTED, None, cap
    return (FOUND, dict(packer.paths), packer.nodes) if ok else (NONE, None, packer.nodes)


def _pack_job(args):
    return pack_paths(*args)


# terminal sets

@lru_cache(maxsize=16)
def automorphisms(g: Graph, limit: int = MAX_AUTOMORPHISMS) -> tuple[tuple[int, ...], ...]:
    """Up to ``limit`` non-identity automorphisms, as vertex permutations.

    Any subset of the group keeps the terminal-set reduction sound, so the
    enumeration simply stops at ``limit``.
    """
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    identity = tuple(range(g.n))
    out = []
    for mapping in islice(GraphMatcher(h, h).isomorphisms_iter(), limit + 1):
        perm = tuple(mapping[v] for v in range(g.n))
        if perm != identity:
            out.append(perm)
    return tuple(out[:limit])


def candidate_terminal_sets(g: Graph, t: int, symmetry: bool = True) -> Iterator[tuple[int, ...]]:
    """Terminal sets of size ``t`` drawn from vertices of degree ``>= t-1``.

    Vertices are ordered by degree (descending) then index. A set is skipped
    when a known automorphism maps it to an earlier set in that order; the
    earlier representative is still searched, so this loses nothing.
    """
    cands = sorted((v for v in range(g.n) if g.degree(v) >= t - 1), key=lambda v: (-g.degree(v), v))
    rank = {v: k for k, v in enumerate(cands)}
    perms = automorphisms(g) if symmetry and t > 1 else ()
    for combo in combinations(cands, t):
        ranks = tuple(rank[v] for v in combo)
        if any(tuple(sorted(rank[p[v]] for v in combo)) < ranks for p in perms):
            continue
        yield combo


def has_kt_immersion(g: Graph, t: int, budget: SearchBudget, jobs: int = 1,
                     terminal_sets: Iterable[Sequence[int]] | None = None) -> SearchOutcome:
    """Decide whether ``g`` has a K_t-immersion within ``budget`` search nodes.

    ``terminal_sets`` restricts the search to the given candidate sets; the
    answer ``"none"`` then only covers those sets.
    """
    if t < 1:
        raise InputError(f"t must be >= 1, got {t}")
    if t > g.n:
        return SearchOutcome(NONE)
    adj, n_edges = _edge_indexed_adjacency(g)
    sets = candidate_terminal_sets(g, t) if terminal_sets is None else (tuple(s) for s in terminal_sets)
    used = 0
    cap = budget.max_nodes

    def finish(terms, paths) -> SearchOutcome:
        cert = ImmersionCertificate.build(terms, paths)
        report = verify_certificate(g, cert)
        if not report.valid:
            raise ConsistencyError(f"search produced an invalid certificate: {report.violations[0].detail}")
        return SearchOutcome(FOUND, cert, used)

    if jobs <= 1:
        for terms in sets:
            used += 1
            if used > cap:
                return SearchOutcome(EXHAUSTED, None, cap)
            status, paths, nodes = pack_paths(adj, n_edges, terms, cap - used)
            used += nodes
            if status == FOUND:
                return finish(terms, paths)
            if status == EXHAUSTED:
                return SearchOutcome(EXHAUSTED, None, cap)
        return SearchOutcome(NONE, None, used)

    # Each round hands every set the budget left before the round, then
    # replays the results in order. A set that would have run out of budget
    # sequentially also overruns here, so the outcome matches jobs=1 exactly.
    sets = iter(sets)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        while True:
            batch = list(islice(sets, 4 * jobs))
            if not batch:
                return SearchOutcome(NONE, None, used)
            left = cap - used
            results = pool.map(_pack_job, [(adj, n_edges, terms, max(left, 0)) for terms in batch])
            for terms, (status, paths, nodes) in zip(batch, results):
                used += 1
                if used > cap:
                    return SearchOutcome(EXHAUSTED, None, cap)
                if status == EXHAUSTED or used + nodes > cap:
                    return SearchOutcome(EXHAUSTED, None, cap)
                used += nodes
                if status == FOUND:
                    return finish(terms, paths)


def _best_known(g: Graph, known: Iterable[ImmersionCertificate]) -> ImmersionCertificate | None:
    best = None
    for cert in known:
        try:
            ok = verify_certificate(g, cert).valid
        except InputError:
            ok = False
        if ok and (best is None or cert.t > best.t):
            best = cert
    return best


def immersion_number(g: Graph, budget: SearchBudget, jobs: int = 1,
                     known: Iterable[ImmersionCertificate] = (),
                     use_fixtures: bool = True) -> SolveResult:
    """Bound ``im(g)``, exactly when the budget allows.

    Known certificates (plus shipped fixtures whose host equals ``g``) seed
    the lower bound. The search then climbs ``t`` from there, so a K_t found
    also witnesses every smaller clique, and a proof of "none" at ``t`` caps
    the answer at ``t-1``.
    """
    upper = degree_upper_bound(g)
    known = list(known)
    if use_fixtures:
        from .fixtures import certificates_for

        known += certificates_for(g)
    cert = _best_known(g, known)
    if cert is None or cert.t < 1:
        cert = ImmersionCertificate(1, (0,), {})
    if cert.t > upper:
        raise ConsistencyError(f"a verified K_{cert.t} exceeds the degree bound {upper}")
    lower = cert.t
    used = 0
    status = EXACT
    t = lower + 1
    while t <= upper:
        outcome = has_kt_immersion(g, t, SearchBudget(max(budget.max_nodes - used, 1)), jobs=jobs)
        used += outcome.nodes_used
        if outcome.status == FOUND:
            assert outcome.certificate is not None
            lower, cert = t, outcome.certificate
            t += 1
        elif outcome.status == NONE:
            upper = t - 1
        else:
            status = BUDGET_EXHAUSTED
            break
    if status == EXACT and lower != upper:
        raise ConsistencyError(f"search ended with lower {lower} below upper {upper}")
    return SolveResult(lower, upper, cert, status, used)


# conjecture explorer

@dataclass
class ConjectureReport:
    m: int
    t: int
    n_vertices: int
    n_edges: int
    degree_histogram: dict[int, int]
    interval: tuple[int, int]
    lift_lower: int
    degree_upper: int
    result: SolveResult
    conjectured: int
    verdict: str  # confirmed | refuted | open
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "t": self.t,
            "graph": {"n": self.n_vertices, "edges": self.n_edges,
                      "degree_histogram": {str(k): v for k, v in self.degree_histogram.items()}},
            "interval": list(self.interval),
            "lift_lower": self.lift_lower,
            "degree_upper": self.degree_upper,
            "solver": self.result.to_json(),
            "conjectured": self.conjectured,
            "verdict": self.verdict,
            "notes": self.notes,
        }


def explore_conjecture(m: int, budget: SearchBudget, jobs: int = 1) -> ConjectureReport:
    """Bound ``im(mu_m(K_{m+1}))`` and compare it with ``2m + 1``."""
    if m < 3:
        raise InputError(f"the conjecture concerns m >= 3, got {m}")
    t = m + 1
    base = complete_graph(t)
    myc = mycielskian(base, m)
    g = myc.graph
    _, lifted = lift_immersion(base, trivial_clique_certificate(base, range(t)), m)
    deg_upper = degree_upper_bound(g)
    interval = (t + 1, 2 * t - 1)
    notes = []
    if not (interval[0] <= lifted.t and deg_upper <= interval[1]):
        raise ConsistencyError(f"bounds {lifted.t}..{deg_upper} fall outside {interval}")
    result = immersion_number(g, budget, jobs=jobs, known=[lifted])
    conjectured = 2 * m + 1
    if result.exact and result.lower == conjectured:
        verdict = "confirmed"
    elif result.upper < conjectured or (result.exact and result.lower != conjectured):
        verdict = "refuted"
    else:
        verdict = "open"
        notes.append(f"search bounded im in [{result.lower}, {result.upper}] within the budget")
    return ConjectureReport(m, t, g.n, g.num_edges, degree_histogram(g), interval, lifted.t,
                            deg_upper, result, conjectured, verdict, notes)


def default_budget() -> SearchBudget:
    return SearchBudget(int(os.environ.get("MYCIMM_BUDGET", "1000000")))
