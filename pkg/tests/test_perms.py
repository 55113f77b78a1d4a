from __future__ import annotations

import itertools
import random

from drgcayley.perms import (PermutationGroup, compose, cycle_type,
                             identity_perm, invert, perm_order)


def test_compose_invert():
    p = (1, 2, 0, 4, 3)
    assert compose(p, invert(p)) == identity_perm(5)
    assert compose(invert(p), p) == identity_perm(5)
    q = (0, 2, 1, 3, 4)
    # compose(p, q) applies q first
    x = 1
    assert compose(p, q)[x] == p[q[x]]


def test_perm_order_and_cycle_type():
    p = (1, 2, 0, 4, 3, 5)   # 3-cycle * 2-cycle
    assert perm_order(p) == 6
    assert cycle_type(p) == (1, 2, 3)


def _closure_brute(gens, n):
    seen = {identity_perm(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def test_schreier_sims_symmetric():
    n = 6
    gens = [(1, 0, 2, 3, 4, 5), (1, 2, 3, 4, 5, 0)]
    G = PermutationGroup(n, gens)
    assert G.order() == 720
    assert G.is_transitive()


def test_schreier_sims_alternating():
    # a 3-cycle and a 5-cycle generate Alt(5)
    G = PermutationGroup(5, [(1, 2, 0, 3, 4), (1, 2, 3, 4, 0)])
    assert G.order() == 60
    assert (1, 0, 2, 3, 4) not in G   # a transposition is odd


def test_order_matches_brute_closure():
    random.seed(7)
    for gens in (
            [(1, 0, 3, 2, 4, 5, 6, 7), (1, 2, 3, 4, 5, 6, 7, 0)],  # dihedral-ish
            [(1, 2, 3, 0, 4, 5, 6, 7), (0, 1, 2, 3, 5, 6, 7, 4)],  # Z4 x Z4
    ):
        G = PermutationGroup(8, gens)
        assert G.order() == len(_closure_brute(gens, 8))


def test_membership_random_products():
    gens = [(1, 2, 0, 3, 4, 5, 6), (0, 1, 2, 3, 5, 6, 4), (1, 0, 2, 3, 4, 6, 5)]
    G = PermutationGroup(7, gens)
    rng = random.Random(3)
    for _ in range(50):
        p = identity_perm(7)
        for _ in range(rng.randrange(1, 8)):
            p = compose(p, rng.choice(gens))
        assert p in G


def test_elements_iterator_is_the_group():
    gens = [(1, 2, 3, 0), (1, 0, 3, 2)]
    G = PermutationGroup(4, gens)
    elems = list(G.elements())
    assert len(elems) == G.order() == 8
    assert len(set(elems)) == 8
    for p in elems:
        assert p in G


def test_stabilizer_sizes_multiply():
    gens = [(1, 0, 2, 3, 4, 5), (1, 2, 3, 4, 5, 0)]
    G = PermutationGroup(6, gens)
    assert G.stabilizer_size(0) == 720
    assert G.stabilizer_size(1) * len(G.orbit_points(0)) == 720


def test_base_hint_is_prefix():
    gens = [(0, 2, 1, 3), (0, 1, 3, 2), (0, 2, 3, 1)]
    G = PermutationGroup(4, gens, base_hint=(3, 1))
    moved = [x for x in (3, 1) if any(g[x] != x for g in gens)]
    assert G.base[:len(moved)] == moved
