"""Acceptance suite: one criterion per test, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete.  Every criterion states its own tolerance; time bounds are wall
clock on the test machine.
"""

from __future__ import annotations

import itertools
import random
import time

from drgcayley import catalog
from drgcayley.cayley import cayley_graph, coset_quotient, distance_sets
from drgcayley.cayleyness import automorphism_group, canonical_form, is_cayley
from drgcayley.designs import find_difference_set
from drgcayley.drg import (benson_trace, check_distance_regular,
                           gh_cayley_feasible, gq_cayley_feasible,
                           halving_obstruction, parse_array, render_array,
                           spectrum_numeric)
from drgcayley.graphs import (antipodal_quotient, bipartite_double,
                              graph_metrics, induced_subgraph, kneser_graph)
from drgcayley.groups import (alternating, closure, construct_group, cyclic,
                              dihedral, generalized_dihedral_extension,
                              metacyclic, parse_connection_labels, symmetric)


def _criterion(num: int, desc: str, failures: list) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"\ncriterion {num} {status}: {desc}", flush=True)
    assert not failures, f"criterion {num}: " + "; ".join(map(str, failures))


def test_criterion_1_table_reproduction():
    t0 = time.monotonic()
    failures = []
    counts = {1: 13, 2: 17, 3: 15, 4: 15}
    for t, want in counts.items():
        rows = catalog.census(table=t, check_cayley=False)
        if len(rows) != want:
            failures.append(f"table {t}: {len(rows)} rows, expected {want}")
        for r in rows:
            if r.status not in ("OK", "feasibility-only"):
                failures.append(f"{r.name}: {r.status}")
    elapsed = time.monotonic() - t0
    if elapsed >= 120:
        failures.append(f"took {elapsed:.1f}s, bound is 120s")
    _criterion(1, f"every (n, d, g, array) tuple reproduced exactly "
                  f"({elapsed:.1f}s, bound 120s)", failures)


# the explicit Cayley constructions and the arrays they must realize
WITNESSES = [
    ("icosahedron over Alt(4)", lambda: alternating(4),
     "(123),(132),(12)(34),(134),(143)", "{5,2,1;1,2,5}"),
    ("Klein over Sym(4)", lambda: symmetric(4),
     "(123),(132),(12)(34),(13),(14),(1234),(1432)", "{7,4,1;1,2,7}"),
    ("Armanios-Wells over the order-32 group", lambda: construct_group("aw"),
     "g1,g2,g3,g4,g1g2g3g4", "{5,4,1,1;1,1,4,5}"),
    ("Shrikhande over Z4 x Z4", lambda: construct_group("product(cyclic(4),cyclic(4))"),
     "(1,0),(3,0),(0,1),(0,3),(1,1),(3,3)", "{6,3;1,2}"),
    ("K*_{4,4} over D_8", lambda: dihedral(8), "ba,ba^2,ba^3", "{3,2,1;1,2,3}"),
    ("K*_{5,5} over D_10", lambda: dihedral(10), "ba,ba^2,ba^3,ba^4", "{4,3,1;1,3,4}"),
    ("K*_{6,6} over D_12", lambda: dihedral(12), "ba,ba^2,ba^3,ba^4,ba^5",
     "{5,4,1;1,4,5}"),
    ("L(Heawood) over the order-21 metacyclic group",
     lambda: metacyclic(7, 3, 2), "(0,1),(0,2),(1,1),(3,2)", "{4,2,2;1,1,2}"),
]

DESIGN_ROWS = [(7, 3, 1, "{3,2,2;1,1,3}"), (13, 4, 1, "{4,3,3;1,1,4}"),
               (21, 5, 1, "{5,4,4;1,1,5}"), (11, 5, 2, "{5,4,3;1,2,5}"),
               (7, 4, 2, "{4,3,2;1,2,4}")]

AFFINE_ROWS = [(2, "{2,1,1,1;1,1,1,2}"), (3, "{3,2,2,1;1,1,2,3}"),
               (4, "{4,3,3,1;1,1,3,4}"), (5, "{5,4,4,1;1,1,4,5}")]


def _gendihedral_witness(v: int, k: int, lam: int):
    ds = find_difference_set(cyclic(v), k, lam)
    G = generalized_dihedral_extension(cyclic(v))
    s = [f"{d}c" if d else "c" for d in ds.elements]
    return G, s


def test_criterion_2_cayley_witnesses():
    t0 = time.monotonic()
    failures = []

    def check(desc, g, want):
        r = check_distance_regular(g)
        got = render_array(r.array) if r.array else f"witness {r.witness}"
        if got != want:
            failures.append(f"{desc}: array {got}, expected {want}")

    for desc, mk, s, want in WITNESSES:
        G = mk()
        check(desc, cayley_graph(G, parse_connection_labels(G, s)), want)
    for v, k, lam, want in DESIGN_ROWS:
        G, s = _gendihedral_witness(v, k, lam)
        g = cayley_graph(G, parse_connection_labels(G, s))
        check(f"IG({v},{k},{lam}) over Dih(Z{v})", g, want)
        built = catalog.design_incidence_graph(v, k, lam)
        if canonical_form(g) != canonical_form(built):
            failures.append(f"IG({v},{k},{lam}): Cayley witness not isomorphic "
                            "to the development incidence graph")
    for q, want in AFFINE_ROWS:
        check(f"IG(AG(2,{q})\\pc)", catalog.affine_plane_minus_pc_graph(q), want)
    # the stated distance-set structure of the two sporadic witnesses
    A = construct_group("aw")
    sa = parse_connection_labels(A, "g1,g2,g3,g4,g1g2g3g4")
    dsa = distance_sets(A, sa)
    if [A.labels[x] for x in dsa.sets[4]] != ["a"]:
        failures.append("Armanios-Wells: S_4 != {a}")
    a = dsa.sets[4][0]
    if set(dsa.sets[3]) != {A.mul(x, a) for x in sa}:
        failures.append("Armanios-Wells: S_3 != Sa")
    K = symmetric(4)
    sk = parse_connection_labels(K, WITNESSES[1][2])
    dsk = distance_sets(K, sk)
    if sorted(K.labels[x] for x in dsk.sets[3]) != ["(124)", "(142)"]:
        failures.append("Klein: S_3 != {(124),(142)}")
    elapsed = time.monotonic() - t0
    if elapsed >= 60:
        failures.append(f"took {elapsed:.1f}s, bound is 60s")
    _criterion(2, f"all explicit Cayley witnesses realize their arrays "
                  f"({elapsed:.1f}s, bound 60s)", failures)


NON_CAYLEY_TEN = ["petersen", "dodecahedron", "coxeter", "halved foster",
                  "sylvester", "foster", "biggs-smith", "tutte's 8-cage",
                  "desargues", "o4"]


def test_criterion_3_non_cayley_exhaustive():
    failures = []
    for name in NON_CAYLEY_TEN:
        g = catalog.build(name)
        v = is_cayley(g, budget=300)
        if str(v) != "no (exhaustive)":
            failures.append(f"{name}: {v}")
    ob = halving_obstruction(parse_array("{3,2,2,2,1,1,1;1,1,1,1,1,1,3}"))
    if not ob.obstructed:
        failures.append("Biggs-Smith halving obstruction did not fire")
    _criterion(3, "ten rows decided no (exhaustive) at 300s budget; "
                  "Biggs-Smith also obstructed via index-2 quotients", failures)


def test_criterion_4_feasibility_propositions():
    failures = []
    for s in (2, 3):
        if gq_cayley_feasible(s).feasible:
            failures.append(f"gq_cayley_feasible({s}) not rejected")
    for s in (2, 3, 4):
        if gh_cayley_feasible(s).feasible:
            failures.append(f"gh_cayley_feasible({s}) not rejected")
    _criterion(4, "generalized quadrangle/hexagon Cayley feasibility rejects "
                  "s in {2,3} and {2,3,4}", failures)


def test_criterion_5_benson_trace():
    t0 = time.monotonic()
    failures = []
    g = catalog.load_asset("gh22_points_a")
    aut = automorphism_group(g)
    rng = random.Random(0)
    gens = aut.generators
    seen = set()
    while len(seen) < 120:
        word = rng.choices(gens, k=rng.randrange(1, 6))
        p = list(range(g.n))
        for w in word:
            p = [w[x] for x in p]
        seen.add(tuple(p))
    bad = 0
    for p in seen:
        bt = benson_trace(g, 2, p)
        if not bt.congruent:
            bad += 1
    if bad:
        failures.append(f"{bad} of {len(seen)} automorphisms violate the congruence")
    elapsed = time.monotonic() - t0
    if elapsed >= 60:
        failures.append(f"took {elapsed:.1f}s, bound is 60s")
    _criterion(5, f"Benson congruence tr = 1 (mod 2) on {len(seen)} distinct "
                  f"automorphisms ({elapsed:.1f}s, bound 60s)", failures)


def test_criterion_6_structural_invariants():
    failures = []
    # distance sets against BFS on every exhibited Cayley construction
    for desc, mk, s, want in WITNESSES:
        G = mk()
        elems = parse_connection_labels(G, s)
        ds = distance_sets(G, elems)   # asserts BFS agreement internally
        if ds.diameter != parse_array(want).d:
            failures.append(f"{desc}: diameter {ds.diameter}")
    for v, k, lam, want in DESIGN_ROWS:
        G, s = _gendihedral_witness(v, k, lam)
        distance_sets(G, parse_connection_labels(G, s))

    # quotient-matrix eigenvalues sit inside the spectrum (tol 1e-6)
    def quot(G, s_labels, sub_gens, want_parts):
        s = parse_connection_labels(G, s_labels)
        H = closure(G, parse_connection_labels(G, sub_gens))
        qm = coset_quotient(G, s, H, check_spectrum=False)
        if len(qm.parts) != want_parts:
            failures.append(f"{G.name}/{sub_gens}: {len(qm.parts)} parts, "
                            f"expected {want_parts}")
        spec = spectrum_numeric(cayley_graph(G, s))
        for ev in qm.eigenvalues():
            if not spec.contains(ev, tol=1e-6):
                failures.append(f"{G.name}/{sub_gens}: eigenvalue {ev:.6f} "
                                "missing from spectrum")
        return qm

    A = construct_group("aw")
    g12 = A.mul(A.index_of("g1"), A.index_of("g2"))
    g23 = A.mul(A.index_of("g2"), A.index_of("g3"))
    g31 = A.mul(A.index_of("g3"), A.index_of("g1"))
    aw_s = "g1,g2,g3,g4,g1g2g3g4"
    sub8 = ",".join(A.labels[x] for x in (g12, g23, g31))
    qm = quot(A, aw_s, sub8, 4)
    if any(qm.entries[i][i] != 0 for i in range(len(qm.parts))):
        failures.append("order-8 quotient of Armanios-Wells has nonzero diagonal")
    qm = quot(A, aw_s, sub8 + ",g4", 2)
    if [qm.entries[0][0], qm.entries[1][1]] != [1, 1]:
        failures.append("index-2 quotient of Armanios-Wells diagonal != 1")
    K = symmetric(4)
    klein_s = WITNESSES[1][2]
    quot(K, klein_s, "(12)(34),(13)(24)", 6)
    quot(K, klein_s, "(123),(12)(34)", 2)   # Alt(4) cosets
    quot(cyclic(6), "1,5", "2", 2)

    # the Alt(4) half of the Klein graph induces the truncated tetrahedron
    klein = catalog.build("klein")
    alt_part = [i for i in range(24) if _is_even_label(K.labels[i])]
    tt = induced_subgraph(klein, alt_part)
    if canonical_form(tt) != canonical_form(catalog.build("truncated-tetrahedron")):
        failures.append("Klein restricted to Alt(4) is not the truncated tetrahedron")

    # array girth == computed girth on every buildable catalog row
    for e in catalog.entries("all"):
        if e.route == "feasibility":
            continue
        arr = parse_array(e.array)
        for variant in e.variants:
            g = variant.build(None)
            m = graph_metrics(g, with_table=False)
            if arr.girth() != m.girth:
                failures.append(f"{e.name}: array girth {arr.girth()}, "
                                f"computed {m.girth}")
            if arr.is_bipartite_array() and m.odd_girth != 0:
                failures.append(f"{e.name}: bipartite array but odd girth "
                                f"{m.odd_girth}")

    # antipodal quotient of the Armanios-Wells graph is the folded 5-cube
    aw_graph = catalog.build("armanios-wells")
    fold = antipodal_quotient(aw_graph)
    if canonical_form(fold) != canonical_form(catalog.build("folded 5-cube")):
        failures.append("antipodal quotient of Armanios-Wells != folded 5-cube")
    _criterion(6, "distance sets match BFS; quotient eigenvalues within 1e-6; "
                  "array girth matches; antipodal quotient folds correctly",
               failures)


def _is_even_label(lbl: str) -> bool:
    """Even permutations of Sym(4) by cycle label: e, 3-cycles, 2+2 cycles."""
    if lbl == "e":
        return True
    cycles = lbl.count("(")
    points = sum(ch.isdigit() for ch in lbl)
    return (points - cycles) % 2 == 0


def test_criterion_7_isomorphism_crosschecks():
    t0 = time.monotonic()
    failures = []
    pairs = [
        ("Pappus", catalog.build("pappus"),
         catalog.affine_plane_minus_pc_graph(3)),
        ("8-cage", catalog.build("tutte's 8-cage"),
         catalog.symplectic_gq_incidence(2)),
        ("Desargues", catalog.build("desargues"),
         bipartite_double(kneser_graph(5, 2))),
        # Table 1 prints the cube as a K*_{n,n}; with valency 3 that forces
        # n = 4, so the check is cube vs K_{4,4} minus a perfect matching
        ("cube", catalog.build("cube"), catalog.crown_graph(4)),
        ("Petersen", catalog.build("petersen"), kneser_graph(5, 2)),
    ]
    for name, a, b in pairs:
        if canonical_form(a) != canonical_form(b):
            failures.append(f"{name}: canonical forms differ")
    elapsed = time.monotonic() - t0
    if elapsed >= 60:
        failures.append(f"took {elapsed:.1f}s, bound is 60s")
    _criterion(7, f"canonical-form equalities hold ({elapsed:.1f}s, bound 60s)",
               failures)


def test_criterion_8_out_of_scale_rows():
    failures = []
    rows = catalog.census(check_cayley=False)
    if len(rows) != 60:
        failures.append(f"{len(rows)} rows, expected 60 (none may be skipped)")
    fo = {r.name: r for r in rows if r.status == "feasibility-only"}
    want = {"IG(GH(3,3))", "IG(GH(4,4))", "DO_5", "L(IG(GH(3,3)))"}
    if set(fo) != want:
        failures.append(f"feasibility-only rows {sorted(fo)}, expected {sorted(want)}")
    for name, r in fo.items():
        if r.n <= 200:
            failures.append(f"{name}: n = {r.n} is not out of scale")
        if not r.computed_cayley.startswith("no ("):
            failures.append(f"{name}: verdict {r.computed_cayley!r}")
        if not r.reference:
            failures.append(f"{name}: no governing argument recorded")
    _criterion(8, "all four n > 200 rows reported feasibility-only with "
                  "their governing propositions", failures)
