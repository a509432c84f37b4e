import random
from itertools import combinations

import networkx as nx
import pytest

from mycimm.certificate import ImmersionCertificate, trivial_clique_certificate, verify_certificate
from mycimm.dnp import (
    DnpBipartite,
    NeighborAssignment,
    check_dnp,
    ensure_dnp,
    hall_failure_structure,
    max_matching,
    proper_edge_coloring_complete,
)
from mycimm.errors import InputError
from mycimm.graph import Graph, complete_bipartite_graph, complete_graph
from mycimm.solver import SearchBudget, has_kt_immersion, immersion_number

from conftest import random_graph

K4_COLORING = {(0, 1): 0, (2, 3): 0, (0, 2): 1, (1, 3): 1, (0, 3): 2, (1, 2): 2}


def k34_certificate():
    """K_4 on the 4-side of K_{3,4}, pairs routed through the 3-side by a 3-edge-coloring of K_4."""
    g = complete_bipartite_graph(3, 4)
    terms = tuple(range(3, 7))
    paths = {(i, j): (terms[i], c, terms[j]) for (i, j), c in K4_COLORING.items()}
    return g, ImmersionCertificate.build(terms, paths)


def matching_size_oracle(bip: DnpBipartite) -> int:
    h = nx.Graph()
    left = [("L", i) for i in range(len(bip.left))]
    h.add_nodes_from(left)
    h.add_nodes_from(("R", b) for b in bip.right)
    h.add_edges_from((("L", i), ("R", b)) for i, nb in enumerate(bip.adj) for b in nb)
    return len(nx.bipartite.hopcroft_karp_matching(h, top_nodes=left)) // 2


def test_matching_k4():
    g = complete_graph(4)
    bip = DnpBipartite.from_certificate(g, trivial_clique_certificate(g, range(4)))
    assert len(max_matching(bip)) == 4


def test_matching_pigeonhole():
    bip = DnpBipartite((0, 1, 2, 3), (4, 5, 6), ((4, 5, 6),) * 4)
    assert len(max_matching(bip)) == 3


def test_matching_empty():
    assert max_matching(DnpBipartite((), (), ())) == {}


def test_matching_is_deterministic_and_maximum():
    rng = random.Random(3)
    for _ in range(100):
        k, r = rng.randint(1, 7), rng.randint(1, 7)
        adj = tuple(tuple(sorted(rng.sample(range(100, 100 + r), rng.randint(0, r)))) for _ in range(k))
        right = tuple(sorted({b for nb in adj for b in nb}))
        bip = DnpBipartite(tuple(range(k)), right, adj)
        mt = max_matching(bip)
        assert mt == max_matching(bip)
        assert len(mt) == matching_size_oracle(bip)
        assert len(set(mt.values())) == len(mt)
        assert all(b in adj[i] for i, b in mt.items())


def test_check_dnp_trivial_k4():
    g = complete_graph(4)
    a = check_dnp(g, trivial_clique_certificate(g, range(4)))
    assert a is not None and len(a) == 4


def test_check_dnp_absent_on_k34():
    g, cert = k34_certificate()
    assert verify_certificate(g, cert).valid
    assert check_dnp(g, cert) is None
    assert hall_failure_structure(g, cert) == (0, 1, 2)


def test_check_dnp_isolated_edge():
    g = Graph.from_edges(4, [(1, 3)])
    cert = trivial_clique_certificate(g, [1, 3])
    assert check_dnp(g, cert).assignment == {0: 3, 1: 1}


def test_check_dnp_rejects_invalid():
    with pytest.raises(InputError):
        check_dnp(complete_graph(3), ImmersionCertificate(2, (0, 1), {(0, 1): (0, 2)}))


def test_coloring_n3():
    assert dict(proper_edge_coloring_complete(3).color) == {(0, 1): 1, (0, 2): 2, (1, 2): 0}


def test_coloring_n1_empty():
    assert dict(proper_edge_coloring_complete(1).color) == {}


@pytest.mark.parametrize("n", range(1, 16))
def test_coloring_proper(n):
    col = proper_edge_coloring_complete(n)
    assert sorted(col.color) == list(combinations(range(n), 2))
    # enumerate every pair of incident edges
    for e, f in combinations(col.color, 2):
        if set(e) & set(f):
            assert col.color[e] != col.color[f]
    assert col.colors_used() <= set(range(n))
    if n % 2 == 0:
        assert col.colors_used() <= set(range(n - 1))
    assert col.is_proper()


def test_ensure_dnp_keeps_dnp_certificate():
    g = complete_graph(5)
    cert = trivial_clique_certificate(g, range(5))
    out, assign = ensure_dnp(g, cert)
    assert out == cert and assign.is_valid_for(g, cert)


def test_ensure_dnp_rebuilds_k34():
    g, cert = k34_certificate()
    out, assign = ensure_dnp(g, cert)
    assert out.terminals == (0, 1, 2, 6)
    assert verify_certificate(g, out).valid
    assert assign.assignment == {0: 3, 1: 4, 2: 5, 3: 0}
    assert check_dnp(g, out) is not None
    # each (b_i, a_k) edge appears in at most one rebuilt path
    edges = [tuple(sorted(e)) for key in out.paths for e in zip(out.paths[key], out.paths[key][1:])]
    assert len(edges) == len(set(edges))


def test_ensure_dnp_rejects_t1():
    with pytest.raises(InputError):
        ensure_dnp(complete_graph(2), ImmersionCertificate(1, (0,), {}))


def no_dnp_instance(rng):
    """K_{t-1,t} plus random edges inside the (t-1)-side, certificate on the t-side from the solver.

    Without extra edges an odd t has no such immersion (K_t would need a proper
    (t-1)-edge-coloring), so draws are repeated until the solver finds one.
    """
    while True:
        t = rng.randint(2, 5)
        b = t - 1
        extra = [(u, v) for u, v in combinations(range(b), 2) if rng.random() < 0.5]
        g = Graph.from_edges(b + t, [(i, b + j) for i in range(b) for j in range(t)] + extra)
        out = has_kt_immersion(g, t, SearchBudget(200_000), terminal_sets=[tuple(range(b, b + t))])
        if out.status == "found":
            return g, out.certificate


def test_odd_complete_bipartite_has_no_immersion_on_large_side():
    g = complete_bipartite_graph(4, 5)
    assert has_kt_immersion(g, 5, SearchBudget(10**6), terminal_sets=[(4, 5, 6, 7, 8)]).status == "none"


def random_certificates(count=30, seed=5):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        if len(out) % 3 == 0:
            out.append(no_dnp_instance(rng))
            continue
        g = random_graph(rng, rng.randint(3, 10), rng.uniform(0.2, 0.7))
        res = immersion_number(g, SearchBudget(30_000), use_fixtures=False)
        if res.certificate.t >= 2:
            out.append((g, res.certificate))
    return out


@pytest.mark.parametrize("g, cert", random_certificates(), ids=lambda x: "")
def test_ensure_dnp_property(g, cert):
    absent = check_dnp(g, cert) is None
    if absent:
        b = hall_failure_structure(g, cert)
        assert len(b) == cert.t - 1
        assert all(set(g.adjacency[a]) == set(b) for a in cert.terminals)
    out, assign = ensure_dnp(g, cert)
    assert out.t == cert.t
    assert verify_certificate(g, out).valid
    assert check_dnp(g, out) is not None
    assert assign.is_valid_for(g, out)
    assert (out == cert) != absent


def test_assignment_json_round_trip():
    a = NeighborAssignment({0: 4, 1: 2})
    assert NeighborAssignment.from_json(a.to_json()) == a
    assert a.to_json() == {"assignment": {"0": 4, "1": 2}}
