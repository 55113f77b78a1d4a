from __future__ import annotations

import math

import pytest

from drgcayley.drg import (IntersectionArray, benson_trace,
                           check_distance_regular, gh_cayley_feasible,
                           gq_cayley_feasible, halving_obstruction,
                           intersection_matrix, parse_array, render_array,
                           spectrum_numeric, spectrum_of_array, srg_parameters)
from drgcayley.graphs import (Graph, bipartite_double, complete_graph,
                              cycle_graph, kneser_graph, lcf_graph)


def test_parse_render_roundtrip():
    s = "{3,2,2,1;1,1,2,3}"
    assert render_array(parse_array(s)) == s
    assert render_array(parse_array(" { 3 , 2 ; 1 , 1 } ")) == "{3,2;1,1}"


def test_array_validation():
    with pytest.raises(ValueError):
        parse_array("{3,2;2,1}")       # c1 != 1
    with pytest.raises(ValueError):
        parse_array("{2,3;1,1}")       # b increasing
    with pytest.raises(ValueError):
        parse_array("{3,2;1}")         # length mismatch
    with pytest.raises(ValueError):
        parse_array("{3,3;1,2}")       # a_1 = 3-3-1 < 0


def test_array_derived_quantities():
    arr = parse_array("{3,2;1,1}")     # Petersen
    assert (arr.d, arr.k, arr.n) == (2, 3, 10)
    assert arr.a == (0, 2)
    assert arr.k_seq() == (1, 3, 6)
    assert arr.girth() == 5 and arr.odd_girth() == 5
    foster = parse_array("{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}")
    assert foster.n == 90
    assert foster.is_bipartite_array()
    cube = parse_array("{3,2,1;1,2,3}")
    assert cube.is_antipodal_array() and cube.is_bipartite_array()


def test_infeasible_k_seq():
    # k_2 = 3*1/2 is not an integer
    arr = IntersectionArray((3, 1), (1, 2))
    with pytest.raises(ValueError):
        arr.k_seq()


def test_check_distance_regular_positive():
    assert render_array(check_distance_regular(kneser_graph(5, 2)).array) == "{3,2;1,1}"
    assert render_array(check_distance_regular(cycle_graph(6)).array) == "{2,1,1;1,1,2}"
    assert render_array(check_distance_regular(complete_graph(4)).array) == "{3;1}"
    heawood = lcf_graph([5, -5], 7)
    assert render_array(check_distance_regular(heawood).array) == "{3,2,2;1,1,3}"


def test_check_distance_regular_negative():
    path = Graph(4, [(0, 1), (1, 2), (2, 3)])
    r = check_distance_regular(path)
    assert r.array is None and r.witness is not None
    assert not r.is_drg
    # regular but not distance-regular: 3-prism has two kinds of edges
    prism = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                      (0, 3), (1, 4), (2, 5)])
    assert check_distance_regular(prism).array is None


def test_spectrum_of_array_petersen():
    evs = spectrum_of_array(parse_array("{3,2;1,1}"))
    assert [e.exact for e in evs if e.rational] == [3, 1, -2]


def test_spectrum_of_array_irrational():
    evs = spectrum_of_array(parse_array("{3,2,2;1,1,3}"))   # Heawood
    vals = sorted(e.value for e in evs)
    assert vals[0] == pytest.approx(-3)
    assert vals[1] == pytest.approx(-math.sqrt(2))
    irr = [e for e in evs if not e.rational]
    assert len(irr) == 2 and all(e.exact is None for e in irr)


def test_spectrum_matches_intersection_matrix():
    arr = parse_array("{4,2,1;1,1,4}")
    m = intersection_matrix(arr)
    assert len(m) == arr.d + 1
    assert m[0][1] == arr.k and m[1][0] == 1   # row 0 = [a_0, b_0, ...]


def test_numeric_spectrum_agrees_with_array():
    g = kneser_graph(5, 2)
    sp = spectrum_numeric(g)
    assert sp.as_pairs() == [(3.0, 1), (1.0, 5), (-2.0, 4)]
    arr_vals = sorted(e.value for e in spectrum_of_array(parse_array("{3,2;1,1}")))
    num_vals = sorted(v for v, _ in sp.as_pairs())
    for a, b in zip(arr_vals, num_vals):
        assert a == pytest.approx(b, abs=1e-6)
    assert sp.contains(-2.0) and not sp.contains(0.5)


def test_srg_parameters():
    assert srg_parameters(parse_array("{6,3;1,2}")) == (16, 6, 2, 2)
    assert srg_parameters(parse_array("{3,2;1,1}")) == (10, 3, 0, 1)
    with pytest.raises(ValueError):
        srg_parameters(parse_array("{3,2,2;1,1,3}"))   # d != 2


def test_gq_feasibility():
    assert not gq_cayley_feasible(2).feasible
    assert not gq_cayley_feasible(3).feasible
    assert gq_cayley_feasible(4).feasible     # gcd(5,6) = 1
    assert not gq_cayley_feasible(5).feasible


def test_gh_feasibility():
    for s in (2, 3, 4):
        assert not gh_cayley_feasible(s).feasible
    assert gh_cayley_feasible(6).feasible     # 6 | s and 5 does not divide s+1
    assert not gh_cayley_feasible(24).feasible  # 25 = s+1 divisible by 5
    f = gh_cayley_feasible(4)
    assert str(f) == "infeasible: s not multiple of 6; 5 divides s+1"


def test_benson_trace_identity_and_validation():
    g = kneser_graph(5, 2)
    ident = list(range(10))
    bt = benson_trace(g, 3, ident)
    assert bt.trace == 10 and bt.fixed_points == 10 and bt.adjacent_moves == 0
    with pytest.raises(ValueError):
        benson_trace(g, 3, [0] * 10)            # not a permutation
    swap = list(range(10))
    swap[0], swap[1] = 1, 0
    with pytest.raises(ValueError):
        benson_trace(g, 3, swap)                # not an automorphism


def test_halving_obstruction():
    biggs_smith = parse_array("{3,2,2,2,1,1,1;1,1,1,1,1,1,3}")
    ob = halving_obstruction(biggs_smith)
    assert ob.obstructed
    assert "index-2" in ob.detail
    cube = parse_array("{3,2,1;1,2,3}")
    ob2 = halving_obstruction(cube)
    assert not ob2.obstructed
    assert set(ob2.admissible_m) <= set(range(4))
