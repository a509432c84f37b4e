from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mycimm.errors import Graph6ParseError, InputError, ParameterError
from mycimm.graph import (
    FamilySpec,
    Graph,
    Multigraph,
    circulant_graph,
    complete_graph,
    cycle_graph,
    degree_histogram,
    emit_graph6,
    generate_family,
    loads_graph,
    parse_graph6,
    path_graph,
)
from mycimm.mycielski import mycielskian


def families(max_n=40):
    for n in range(1, max_n + 1):
        yield FamilySpec("path", n)
        yield FamilySpec("complete", n)
        if n >= 3:
            yield FamilySpec("cycle", n)
        if n >= 5:
            yield FamilySpec("circulant", n, jumps=(1, 2))
        yield FamilySpec("complete_bipartite", n // 2, n2=n - n // 2)


def test_path5():
    g = path_graph(5)
    assert (g.n, g.num_edges) == (5, 4)
    assert g.degrees() == [1, 2, 2, 2, 1]


def test_complete4():
    g = complete_graph(4)
    assert (g.n, g.num_edges) == (4, 6)
    assert set(g.degrees()) == {3}


def test_circulant_7_12():
    g = circulant_graph(7, [1, 2])
    assert (g.n, g.num_edges) == (7, 14)
    assert set(g.degrees()) == {4}


def test_complete_bipartite_sides_contiguous():
    g = generate_family(FamilySpec("complete_bipartite", 2, n2=3))
    assert g.sorted_edges() == [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]


@pytest.mark.parametrize("spec", [
    dict(kind="cycle", n=2),
    dict(kind="path", n=0),
    dict(kind="wheel", n=5),
    dict(kind="complete_bipartite", n=2),
    dict(kind="circulant", n=5, jumps=(5,)),
    dict(kind="circulant", n=5),
])
def test_invalid_family(spec):
    with pytest.raises(ParameterError):
        FamilySpec(**spec)


def test_graph_rejects_loops_and_parallel_edges():
    with pytest.raises(InputError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph.from_edges(3, [(0, 3)])


def test_emit_k3():
    assert emit_graph6(complete_graph(3)) == "Bw"


@pytest.mark.parametrize("spec", list(families(40)), ids=lambda s: s.name())
def test_graph6_matches_networkx_and_round_trips(spec):
    g = generate_family(spec)
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    reference = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert emit_graph6(g) == reference
    assert parse_graph6(emit_graph6(g)) == g


def test_graph6_round_trip_p5():
    assert parse_graph6(emit_graph6(path_graph(5))) == path_graph(5)


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)


@pytest.mark.parametrize("text, offset", [("", 0), ("B", 1), ("Bww", 2), ("B w", 1), ("Bx", 1), ("~??", 0)])
def test_graph6_parse_errors(text, offset):
    with pytest.raises(Graph6ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_graph6_rejects_large():
    with pytest.raises(ParameterError):
        emit_graph6(path_graph(63))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 30).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, max(n - 1, 0)),
                                                      st.integers(0, max(n - 1, 0))), max_size=60))))
def test_graph6_round_trip_random(data):
    n, pairs = data
    g = Graph.from_edges(n, {tuple(sorted(p)) for p in pairs if p[0] != p[1]})
    assert parse_graph6(emit_graph6(g)) == g
    assert sum(g.degrees()) == 2 * g.num_edges


def test_json_round_trip_with_labels():
    g = Graph.from_edges(3, [(0, 1)], labels=["a", "b", "c"])
    back = loads_graph(__import__("json").dumps(g.to_json()))
    assert back == g and back.labels == ("a", "b", "c")


def test_loads_graph_sniffs_graph6():
    assert loads_graph("Bw\n") == complete_graph(3)


def test_histogram_myc3_k4():
    assert degree_histogram(mycielskian(complete_graph(4), 3).graph) == {4: 5, 6: 8}


def test_histogram_myc3_p5():
    assert degree_histogram(mycielskian(path_graph(5), 3).graph) == {2: 6, 3: 3, 4: 6, 5: 1}


def test_histogram_edgeless():
    assert degree_histogram(Graph(4, frozenset())) == {0: 4}


@pytest.mark.parametrize("spec", list(families(12)), ids=lambda s: s.name())
def test_handshake_and_determinism(spec):
    g = generate_family(spec)
    hist = degree_histogram(g)
    assert sum(hist.values()) == g.n
    assert sum(d * c for d, c in hist.items()) == 2 * g.num_edges
    assert generate_family(spec).edges == g.edges


def test_multigraph_split_off_conserves_edges():
    mg = Multigraph.from_graph(cycle_graph(4))
    before = mg.total_edges()
    mg.split_off(0, 1, 2)
    assert mg.total_edges() == before - 1
    assert mg.multiplicity(0, 2) == 1 and mg.multiplicity(0, 1) == 0
    with pytest.raises(InputError):
        mg.split_off(0, 1, 2)


def test_subgraph_relation():
    assert path_graph(4).is_subgraph_of(cycle_graph(4))
    assert not cycle_graph(4).is_subgraph_of(path_graph(4))
    assert all(complete_graph(5).has_edge(u, v) for u, v in combinations(range(5), 2))
