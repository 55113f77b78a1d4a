from __future__ import annotations

import pytest

from drgcayley.cayleyness import canonical_form
from drgcayley.designs import (affine_plane_minus_pc_graph,
                               complement_difference_set, difference_counts,
                               find_difference_set,
                               incidence_graph_of_development, paley_graph,
                               quadratic_rds, symplectic_gq_incidence,
                               verify_difference_set,
                               verify_relative_difference_set)
from drgcayley.drg import check_distance_regular, render_array
from drgcayley.graphs import cycle_graph, graph_metrics, lcf_graph
from drgcayley.groups import cyclic, elementary_abelian


def test_fano_difference_set():
    G = cyclic(7)
    ds = find_difference_set(G, 3, 1)
    assert ds is not None and ds.params == (7, 3, 1)
    chk = verify_difference_set(G, ds.elements)
    assert chk.ok and chk.params == (7, 3, 1)


def test_difference_set_catalog():
    for v, k, lam in ((7, 3, 1), (13, 4, 1), (21, 5, 1), (11, 5, 2), (7, 4, 2)):
        ds = find_difference_set(cyclic(v), k, lam)
        assert ds is not None, (v, k, lam)
        assert verify_difference_set(ds.group, ds.elements).ok


def test_no_difference_set():
    assert find_difference_set(cyclic(7), 3, 2) is None
    assert find_difference_set(cyclic(8), 3, 1) is None


def test_verify_rejects_non_difference_set():
    G = cyclic(7)
    chk = verify_difference_set(G, (0, 1, 2))
    assert not chk.ok


def test_difference_counts():
    G = cyclic(7)
    counts = difference_counts(G, (1, 2, 4))
    assert counts[0] == 0                    # equal pairs are excluded
    assert all(c == 1 for c in counts[1:])   # lambda = 1 elsewhere


def test_complement_difference_set():
    ds = find_difference_set(cyclic(7), 3, 1)
    cds = complement_difference_set(ds)
    assert cds.params == (7, 4, 2)
    assert verify_difference_set(cds.group, cds.elements).ok


def test_development_of_fano_is_heawood():
    ds = find_difference_set(cyclic(7), 3, 1)
    g = incidence_graph_of_development(ds)
    assert canonical_form(g) == canonical_form(lcf_graph([5, -5], 7))


def test_biplane_incidence_graph():
    ds = find_difference_set(cyclic(11), 5, 2)
    g = incidence_graph_of_development(ds)
    r = check_distance_regular(g)
    assert render_array(r.array) == "{5,4,3;1,2,5}"


def test_quadratic_rds():
    for q in (3, 4, 5):
        rds = quadratic_rds(q)
        assert rds.params == (q, q, q, 1)
        got = verify_relative_difference_set(rds.group, rds.forbidden, rds.elements)
        assert got == (q, q, q, 1)


def test_relative_ds_rejects_plain_set():
    G = cyclic(9)
    assert verify_relative_difference_set(G, (0, 3, 6), (0, 1, 2)) is None


def test_affine_plane_graphs():
    # q = 2 gives the 8-cycle
    g2 = affine_plane_minus_pc_graph(2)
    assert canonical_form(g2) == canonical_form(cycle_graph(8))
    g3 = affine_plane_minus_pc_graph(3)
    r = check_distance_regular(g3)
    assert render_array(r.array) == "{3,2,2,1;1,1,2,3}"   # Pappus
    g4 = affine_plane_minus_pc_graph(4)
    assert render_array(check_distance_regular(g4).array) == "{4,3,3,1;1,1,3,4}"


def test_symplectic_gq_is_8cage():
    g = symplectic_gq_incidence(2)
    m = graph_metrics(g)
    assert (g.n, m.girth, m.diameter) == (30, 8, 4)
    assert render_array(check_distance_regular(g).array) == "{3,2,2,2;1,1,1,3}"


def test_symplectic_gq_parameters_q3():
    g = symplectic_gq_incidence(3)
    assert g.n == 80
    assert render_array(check_distance_regular(g).array) == "{4,3,3,3;1,1,1,4}"


def test_paley_graphs():
    assert canonical_form(paley_graph(5)) == canonical_form(cycle_graph(5))
    assert render_array(check_distance_regular(paley_graph(9)).array) == "{4,2;1,2}"
    assert render_array(check_distance_regular(paley_graph(13)).array) == "{6,3;1,3}"


def test_paley_needs_prime_power_1_mod_4():
    with pytest.raises(ValueError):
        paley_graph(7)
