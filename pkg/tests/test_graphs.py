from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from drgcayley.cayleyness import canonical_form
from drgcayley.graphs import (Graph, antipodal_quotient, bipartite_double,
                              bfs_distances, complement, complete_graph,
                              complete_multipartite, cycle_graph,
                              distance_i_graph, format_adjacency_list,
                              graph_metrics, halved_graph, induced_subgraph,
                              kneser_graph, lcf_graph, line_graph,
                              parse_adjacency_list, parse_graph6, to_graph6)


def petersen() -> Graph:
    return kneser_graph(5, 2)


def test_graph_basics():
    g = cycle_graph(5)
    assert g.n == 5
    assert sorted(g.neighbors(0)) == [1, 4]
    assert g.has_edge(2, 3) and not g.has_edge(1, 3)
    assert g.degree(0) == 2
    assert g.edge_count() == 5


def test_graph_rejects_loops_and_bad_vertices():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 7)])


def test_metrics_oracles():
    m = graph_metrics(petersen())
    assert (m.diameter, m.girth, m.connected, m.bipartite) == (2, 5, True, False)
    assert m.odd_girth == 5
    h = graph_metrics(lcf_graph([5, -5], 7))   # Heawood
    assert (h.n, h.diameter, h.girth, h.bipartite) == (14, 3, 6, True)
    assert h.even_girth == 6 and h.odd_girth == 0


def test_metrics_disconnected():
    g = Graph(6, [(0, 1), (2, 3), (4, 5)])
    m = graph_metrics(g)
    assert not m.connected
    assert m.diameter == 6   # n stands in for infinity
    assert m.girth == 0


def test_bfs_distances():
    d = bfs_distances(cycle_graph(6), 0)
    assert d == [0, 1, 2, 3, 2, 1]


def test_line_graph_of_k4_is_octahedron():
    lg = line_graph(complete_graph(4))
    assert lg.n == 6
    assert all(lg.degree(v) == 4 for v in range(6))
    assert canonical_form(lg) == canonical_form(complete_multipartite(3, 2))


def test_bipartite_double_of_k4_is_cube():
    bd = bipartite_double(complete_graph(4))
    q3 = lcf_graph([3, -3], 4)
    assert canonical_form(bd) == canonical_form(q3)


def test_halved_cube_is_k4():
    q3 = bipartite_double(complete_graph(4))
    h = halved_graph(q3, 0)
    assert canonical_form(h) == canonical_form(complete_graph(4))


def test_halved_rejects_nonbipartite():
    with pytest.raises(ValueError):
        halved_graph(cycle_graph(5))


def test_complement_of_c5_is_c5():
    assert canonical_form(complement(cycle_graph(5))) == canonical_form(cycle_graph(5))


def test_distance_i_graph():
    q3 = bipartite_double(complete_graph(4))
    g3 = distance_i_graph(q3, 3)
    assert all(g3.degree(v) == 1 for v in range(8))   # antipodal matching
    g2 = distance_i_graph(petersen(), 2)
    assert all(g2.degree(v) == 6 for v in range(10))


def test_antipodal_quotient_of_cube():
    q3 = bipartite_double(complete_graph(4))
    q = antipodal_quotient(q3)
    assert canonical_form(q) == canonical_form(complete_graph(4))


def test_antipodal_quotient_rejects_nonantipodal():
    with pytest.raises(ValueError):
        antipodal_quotient(petersen())   # distance-2 graph is not a matching


def test_kneser_oracles():
    p = petersen()
    assert p.n == 10 and all(p.degree(v) == 3 for v in range(10))
    o4 = kneser_graph(7, 3)
    assert o4.n == 35 and all(o4.degree(v) == 4 for v in range(35))


def test_induced_subgraph():
    g = complete_graph(5)
    h = induced_subgraph(g, [0, 2, 4])
    assert h.n == 3 and h.edge_count() == 3


def test_lcf_closes_cycle():
    g = lcf_graph([2], 4)   # K4 as a Hamiltonian LCF code
    assert g.n == 4 and g.edge_count() == 6


def test_graph6_known_values():
    # classic encodings
    assert to_graph6(complete_graph(4)) == "C~"
    k4 = parse_graph6("C~")
    assert k4.n == 4 and k4.edge_count() == 6
    p = parse_graph6(to_graph6(petersen()))
    assert canonical_form(p) == canonical_form(petersen())


def test_graph6_large_header():
    g = cycle_graph(80)   # needs the 4-byte size prefix
    h = parse_graph6(to_graph6(g))
    assert h.n == 80 and h.edge_count() == 80


def test_adjacency_list_roundtrip():
    g = petersen()
    h = parse_adjacency_list(format_adjacency_list(g))
    assert h.n == g.n
    assert all(sorted(h.neighbors(v)) == sorted(g.neighbors(v)) for v in range(g.n))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 33), st.data())
def test_graph6_roundtrip(n, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph(n, edges)
    h = parse_graph6(to_graph6(g))
    assert h.n == g.n
    assert all(sorted(h.neighbors(v)) == sorted(g.neighbors(v)) for v in range(n))
