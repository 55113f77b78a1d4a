#!/usr/bin/env python3
"""Regenerate the packaged graph6 assets in src/drgcayley/data/.

Each asset is rebuilt from first principles, validated against its
expected intersection array and girth, and only then written out.  The
constructions that need scaffolding (Hoffman-Singleton, the Hermitian
unital) live here so the library itself stays lean.

Run from the repository root:  python3 tools/make_assets.py [--out DIR]
"""

from __future__ import annotations

import argparse
import sys
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from drgcayley.drg import check_distance_regular, parse_array, render_array
from drgcayley.gf import gf
from drgcayley.graphs import (Graph, graph_metrics, halved_graph, induced_subgraph,
                              lcf_graph, to_graph6)
from drgcayley.cayleyness import canonical_form


def foster_graph() -> Graph:
    return lcf_graph([17, -9, 37, -37, 9, -17], 15, name="Foster")


def biggs_smith_graph() -> Graph:
    """Z17 voltage construction: six fibers A..F, cycles inside A, E, C, F
    with steps 1, 2, 4, 8, and spokes B ~ A,C,D and D ~ E,F."""
    A, B, C, D, E, F = (range(17 * t, 17 * (t + 1)) for t in range(6))
    edges = set()
    for i in range(17):
        edges.add((A[i], A[(i + 1) % 17]))
        edges.add((C[i], C[(i + 4) % 17]))
        edges.add((E[i], E[(i + 2) % 17]))
        edges.add((F[i], F[(i + 8) % 17]))
        edges.add((B[i], A[i]))
        edges.add((B[i], C[i]))
        edges.add((B[i], D[i]))
        edges.add((D[i], E[i]))
        edges.add((D[i], F[i]))
    return Graph(102, edges, name="Biggs-Smith")


def hoffman_singleton_graph() -> Graph:
    """Five pentagons P_h and five pentagrams Q_i on Z5, with
    P_h[j] ~ Q_i[h*i + j mod 5]."""
    def P(h: int, j: int) -> int:
        return 5 * h + j % 5

    def Q(i: int, j: int) -> int:
        return 25 + 5 * i + j % 5

    edges = set()
    for h in range(5):
        for j in range(5):
            edges.add(tuple(sorted((P(h, j), P(h, j + 1)))))
            edges.add(tuple(sorted((Q(h, j), Q(h, j + 2)))))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.add(tuple(sorted((P(h, j), Q(i, h * i + j)))))
    return Graph(50, edges, name="Hoffman-Singleton")


def sylvester_graph() -> Graph:
    """Vertices of Hoffman-Singleton at distance >= 2 from both ends of an
    edge; edge-transitivity makes the choice of edge immaterial."""
    hs = hoffman_singleton_graph()
    r = check_distance_regular(hs)
    assert r.array is not None and render_array(r.array) == "{7,6;1,1}", "Hoffman-Singleton sanity"
    u, v = 0, min(hs.neighbors(0))
    near = {u, v} | set(hs.neighbors(u)) | set(hs.neighbors(v))
    far = [w for w in range(50) if w not in near]
    assert len(far) == 36
    g = induced_subgraph(hs, far)
    g.name = "Sylvester"
    return g


def hermitian_perp_graph() -> Graph:
    """The 63 nonisotropic points of PG(2,9) under the Hermitian form
    h(x,y) = sum x_i y_i^3, adjacent when perpendicular."""
    F = gf(9)

    def conj(a: int) -> int:
        return F.pow(a, 3)

    def h(x, y) -> int:
        acc = 0
        for a, b in zip(x, y):
            acc = F.add[acc][F.mul[a][conj(b)]]
        return acc

    points = []
    for x0 in range(9):
        for x1 in range(9):
            for x2 in range(9):
                p = (x0, x1, x2)
                if p == (0, 0, 0):
                    continue
                lead = next(a for a in p if a != 0)
                if lead != 1:
                    continue
                points.append(p)
    assert len(points) == 91
    nip = [p for p in points if h(p, p) != 0]
    assert len(nip) == 63, f"nonisotropic count {len(nip)}"
    edges = [(i, j) for i, j in combinations(range(63), 2)
             if h(nip[i], nip[j]) == 0]
    labels = ["".join(str(c) for c in p) for p in nip]
    return Graph(63, edges, name="GH(2,2) points", labels=labels)


def hexagon_incidence_graph(pg: Graph) -> Graph:
    """Point-line incidence of the hexagon whose lines are the triangles
    of the point graph; points first, then the 63 triangles."""
    tris = []
    for u in range(pg.n):
        for v in pg.neighbors(u):
            if v <= u:
                continue
            common = pg.rows[u] & pg.rows[v]
            while common:
                t = common & -common
                w = t.bit_length() - 1
                common ^= t
                if w > v:
                    tris.append((u, v, w))
    assert len(tris) == 63, f"triangle count {len(tris)}"
    edges = []
    for li, tri in enumerate(tris):
        for p in tri:
            edges.append((p, 63 + li))
    labels = [f"p{i}" for i in range(63)] + [f"L{i}" for i in range(63)]
    return Graph(126, edges, name="12-cage", labels=labels)



def coxeter_graph() -> Graph:
    """Kneser graph on the 3-subsets of a 7-set, restricted to the 28
    triples that are not lines of the Fano plane (disjointness adjacency)."""
    lines = {frozenset(l) for l in
             [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6),
              (2, 3, 6), (2, 4, 5)]}
    triples = [t for t in combinations(range(7), 3) if frozenset(t) not in lines]
    assert len(triples) == 28
    edges = [(i, j) for i, j in combinations(range(28), 2)
             if not set(triples[i]) & set(triples[j])]
    return Graph(28, edges, name="Coxeter")


def dodecahedron_graph() -> Graph:
    """Generalized Petersen graph GP(10,2)."""
    edges = []
    for i in range(10):
        edges.append((i, (i + 1) % 10))
        edges.append((10 + i, 10 + (i + 2) % 10))
        edges.append((i, 10 + i))
    return Graph(20, edges, name="dodecahedron")


def validate(g: Graph, array: str, girth: int) -> Graph:
    m = graph_metrics(g, with_table=False)
    r = check_distance_regular(g)
    if r.array is None:
        raise SystemExit(f"{g.name}: not distance-regular ({r.witness})")
    got = render_array(r.array)
    if got != array:
        raise SystemExit(f"{g.name}: array {got}, expected {array}")
    if m.girth != girth:
        raise SystemExit(f"{g.name}: girth {m.girth}, expected {girth}")
    print(f"  ok {g.name}: n={g.n} array={got} girth={m.girth}")
    return g


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    default_out = Path(__file__).resolve().parent.parent / "src" / "drgcayley" / "data"
    ap.add_argument("--out", type=Path, default=default_out)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    print("building assets:")
    assets: dict[str, Graph] = {}
    assets["foster"] = validate(foster_graph(),
                                "{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}", 10)
    assets["biggs_smith"] = validate(biggs_smith_graph(),
                                     "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}", 9)
    assets["sylvester"] = validate(sylvester_graph(), "{5,4,2;1,1,4}", 5)
    assets["coxeter"] = validate(coxeter_graph(), "{3,2,2,1;1,1,1,2}", 7)
    assets["dodecahedron"] = validate(dodecahedron_graph(),
                                      "{3,2,1,1,1;1,1,1,2,3}", 5)

    pg_a = validate(hermitian_perp_graph(), "{6,4,4;1,1,3}", 3)
    cage = validate(hexagon_incidence_graph(pg_a),
                    "{3,2,2,2,2,2;1,1,1,1,1,3}", 12)
    half_points = halved_graph(cage, part=0)
    half_lines = halved_graph(cage, part=1)
    half_points.name = "GH(2,2) points"
    half_lines.name = "GH(2,2) points (dual)"
    validate(half_points, "{6,4,4;1,1,3}", 3)
    pg_b = validate(half_lines, "{6,4,4;1,1,3}", 3)

    ca = canonical_form(pg_a)
    assert canonical_form(half_points) == ca, "points half must recover the perp graph"
    cb = canonical_form(pg_b)
    assert ca != cb, "the two hexagon point graphs must be nonisomorphic"
    print("  ok point graphs: halves of the 12-cage, mutually nonisomorphic")

    assets["gh22_points_a"] = pg_a
    assets["gh22_points_b"] = pg_b
    assets["tutte_12cage"] = cage

    for stem, g in assets.items():
        path = args.out / f"{stem}.g6"
        path.write_text(to_graph6(g) + "\n")
        print(f"  wrote {path} ({g.n} vertices)")


if __name__ == "__main__":
    main()
