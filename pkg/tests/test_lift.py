import random

import pytest

from mycimm.certificate import ImmersionCertificate, trivial_clique_certificate, verify_certificate
from mycimm.dnp import NeighborAssignment, check_dnp, ensure_dnp
from mycimm.errors import InputError
from mycimm.graph import Graph, complete_graph, path_graph
from mycimm.lift import apex_path, lift_certificate, lift_degenerate, lift_immersion
from mycimm.mycielski import mycielskian
from mycimm.solver import SearchBudget, immersion_number

from conftest import random_graph


def test_lift_k4_m2():
    g = complete_graph(4)
    cert, assign = ensure_dnp(g, trivial_clique_certificate(g, range(4)))
    lifted = lift_certificate(g, cert, assign, 2)
    assert lifted.t == 5
    assert verify_certificate(mycielskian(g, 2).graph, lifted).valid


@pytest.mark.parametrize("t", [2, 3, 5])
def test_lift_m1_uses_direct_apex_edges(t):
    g = complete_graph(t)
    cert, assign = ensure_dnp(g, trivial_clique_certificate(g, range(t)))
    lifted = lift_certificate(g, cert, assign, 1)
    myc = mycielskian(g, 1)
    assert all(lifted.paths[(i, t)] == (i, myc.apex) for i in range(t))
    assert verify_certificate(myc.graph, lifted).valid


def test_lift_p2_m3_zigzag():
    g = path_graph(2)
    cert = trivial_clique_certificate(g, [0, 1])
    lifted = lift_certificate(g, cert, NeighborAssignment({0: 1, 1: 0}), 3)
    # (v1,0)-(v2,1)-(v1,2)-w and (v2,0)-(v1,1)-(v2,2)-w
    assert lifted.paths[(0, 2)] == (0, 3, 4, 6)
    assert lifted.paths[(1, 2)] == (1, 2, 5, 6)
    assert verify_certificate(mycielskian(g, 3).graph, lifted).valid


def test_lift_rejects_bad_inputs():
    g = path_graph(3)
    cert = trivial_clique_certificate(g, [0, 1])
    with pytest.raises(InputError):
        lift_certificate(g, cert, NeighborAssignment({0: 1, 1: 1}), 2)
    with pytest.raises(InputError):
        lift_certificate(g, ImmersionCertificate(1, (0,), {}), NeighborAssignment({0: 1}), 2)


@pytest.mark.parametrize("m", [1, 2, 5])
def test_degenerate_edgeless(m):
    g = Graph(3, frozenset())
    cert = lift_degenerate(g, m)
    assert cert.t == 2
    assert verify_certificate(mycielskian(g, m).graph, cert).valid
    myc, lifted = lift_immersion(g, ImmersionCertificate(1, (2,), {}), m)
    assert lifted.terminals == (myc.index(2, m - 1), myc.apex)


def classify(myc, u, v):
    if myc.apex in (u, v):
        return "apex"
    lu, lv = myc.vertex_of(u).level, myc.vertex_of(v).level
    return "level0" if lu == lv == 0 else "cross"


def lifted_cases(seed=9, count=12):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_graph(rng, rng.randint(3, 9), rng.uniform(0.3, 0.7))
        res = immersion_number(g, SearchBudget(30_000), use_fixtures=False)
        if res.certificate.t >= 2:
            out.append((g, res.certificate))
    return out


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("g, cert", lifted_cases(), ids=lambda x: "")
def test_lift_property(g, cert, m):
    repaired, assign = ensure_dnp(g, cert)
    lifted = lift_certificate(g, repaired, assign, m)
    myc = mycielskian(g, m)
    assert verify_certificate(myc.graph, lifted).valid
    t = repaired.t
    for key, p in lifted.paths.items():
        kinds = {classify(myc, u, v) for u, v in zip(p, p[1:])}
        if key[1] < t:
            assert kinds == {"level0"}
        else:
            assert "level0" not in kinds
    if m >= 2:
        tops = []
        for i, v in enumerate(repaired.terminals):
            top = lifted.paths[(i, t)][-2]
            expect = v if (m - 1) % 2 == 0 else assign[i]
            assert top == myc.index(expect, m - 1)
            tops.append(top)
        assert len(set(tops)) == len(tops)


def test_apex_path_strictly_climbs():
    myc = mycielskian(complete_graph(3), 6)
    p = apex_path(myc, 0, 1)
    assert [myc.vertex_of(x).level for x in p[:-1]] == list(range(6))
    assert len(set(p)) == len(p)
