"""Walk through the sporadic Cayley witnesses.

Shows the group, the connection set, the distance sets S_0..S_d, and for
the Armanios-Wells graph the two equitable coset partitions with their
quotient matrices.
"""

from drgcayley.cayley import cayley_graph, coset_quotient, distance_sets
from drgcayley.drg import check_distance_regular, render_array, spectrum_numeric
from drgcayley.groups import closure, construct_group, parse_connection_labels


def show(title: str, group_spec: str, set_labels: str) -> None:
    G = construct_group(group_spec)
    s = parse_connection_labels(G, set_labels)
    g = cayley_graph(G, s)
    arr = check_distance_regular(g).array
    print(f"== {title}")
    print(f"   group {G.name} (order {G.n}), S = {{{set_labels}}}")
    print(f"   intersection array {render_array(arr)}")
    ds = distance_sets(G, s)
    for i, t in enumerate(ds.sets):
        print(f"   S_{i} = {{{', '.join(G.labels[x] for x in t)}}}")
    print(f"   N_d is a subgroup: {ds.n_d_is_subgroup}")
    print()


show("Icosahedron", "alt(4)", "(123),(132),(12)(34),(134),(143)")
show("Klein graph", "sym(4)", "(123),(132),(12)(34),(13),(14),(1234),(1432)")
show("Armanios-Wells graph", "aw", "g1,g2,g3,g4,g1g2g3g4")

print("== Equitable partitions of the Armanios-Wells graph")
A = construct_group("aw")
s = parse_connection_labels(A, "g1,g2,g3,g4,g1g2g3g4")
g = cayley_graph(A, s)
spec = spectrum_numeric(g)
print(f"   spectrum: {spec.as_pairs()}")
prods = [A.mul(A.index_of(x), A.index_of(y))
         for x, y in (("g1", "g2"), ("g2", "g3"), ("g3", "g1"))]
for extra, blurb in (((), "order-8 subgroup, four cosets"),
                     (("g4",), "index-2 subgroup, two cosets")):
    gens = prods + [A.index_of(x) for x in extra]
    H = closure(A, gens)
    qm = coset_quotient(A, s, H)
    print(f"   {blurb}: quotient matrix {[list(r) for r in qm.entries]}, "
          f"eigenvalues {[round(v, 6) for v in qm.eigenvalues()]}")
