"""Difference sets, relative difference sets, and the incidence-geometry
constructions: symmetric-design incidence graphs over generalized dihedral
groups, affine planes minus a parallel class from quadratic relative
difference sets, symplectic generalized quadrangles, and Paley graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .cayley import cayley_graph
from .gf import gf
from .graphs import Graph
from .groups import Group, generalized_dihedral_extension, semifield_plane_group

MAX_FIND_ORDER = 64
MAX_RDS_ORDER = 512


@dataclass(frozen=True)
class DifferenceSet:
    group: Group
    elements: tuple[int, ...]
    params: tuple[int, int, int]   # (n, k, lambda)


@dataclass(frozen=True)
class RelativeDifferenceSet:
    group: Group
    forbidden: tuple[int, ...]
    elements: tuple[int, ...]
    params: tuple[int, int, int, int]   # (m, n, k, lambda)


@dataclass(frozen=True)
class DSCheck:
    params: Optional[tuple[int, int, int]]
    witness: Optional[tuple[int, int, int]] = None   # (g, got, expected)

    @property
    def ok(self) -> bool:
        return self.params is not None


def difference_counts(group: Group, d: Sequence[int]) -> list[int]:
    """counts[g] = number of ordered pairs d1 != d2 in D with d1·d2^{-1} = g."""
    counts = [0] * group.n
    for d1 in d:
        for d2 in d:
            if d1 != d2:
                counts[group.mul(d1, group.inv(d2))] += 1
    return counts


def verify_difference_set(group: Group, d: Sequence[int]) -> DSCheck:
    """(n, k, lambda) when every non-identity element occurs equally often
    among the differences of D, else a witness (g, got, expected)."""
    delems = tuple(sorted(set(d)))
    if len(delems) != len(tuple(d)):
        raise ValueError("difference set has repeated elements")
    counts = difference_counts(group, delems)
    e = group.identity
    lam = None
    for g in range(group.n):
        if g == e:
            continue
        if lam is None:
            lam = counts[g]
        elif counts[g] != lam:
            return DSCheck(None, (g, counts[g], lam))
    if lam is None or lam == 0:
        return DSCheck(None, (0, 0, 1))
    return DSCheck((group.n, len(delems), lam))


def find_difference_set(group: Group, k: int, lam: int) -> Optional[DifferenceSet]:
    """Lexicographically least (n,k,lam) difference set, or None after
    exhausting all k-subsets."""
    n = group.n
    if n > MAX_FIND_ORDER:
        raise ValueError(f"group order {n} exceeds search guard {MAX_FIND_ORDER}")
    if k * (k - 1) != lam * (n - 1):
        return None
    for cand in combinations(range(n), k):
        chk = verify_difference_set(group, cand)
        if chk.ok and chk.params == (n, k, lam):
            return DifferenceSet(group, cand, (n, k, lam))
    return None


def complement_difference_set(ds: DifferenceSet) -> DifferenceSet:
    """G \\ D, an (n, n-k, n-2k+lambda) difference set."""
    n, k, lam = ds.params
    comp = tuple(x for x in range(n) if x not in set(ds.elements))
    chk = verify_difference_set(ds.group, comp)
    assert chk.ok, "complement failed verification"
    return DifferenceSet(ds.group, comp, chk.params)


def incidence_graph_of_development(ds: DifferenceSet) -> Graph:
    """Incidence graph of the development of D over abelian G, realized as
    Cay(G extended by the inverting involution c, S = Dc).

    Vertices 0..n-1 are the points (group elements), n..2n-1 the blocks.
    """
    g = ds.group
    if not g.is_abelian:
        raise ValueError("development graph needs an abelian group")
    ext = generalized_dihedral_extension(g)
    s = [g.n + x for x in ds.elements]
    n, k, lam = ds.params
    return cayley_graph(ext, s, name=f"IG({n},{k},{lam})")


def verify_relative_difference_set(group: Group, forbidden: Sequence[int],
                                   d: Sequence[int]) -> Optional[tuple[int, int, int, int]]:
    """(m, n, k, lambda) for a relative difference set, or None.

    Every element outside N must occur exactly lambda times among the
    differences; elements of N \\ {e} must not occur at all.
    """
    nset = set(forbidden)
    counts = difference_counts(group, d)
    e = group.identity
    lam = None
    for g in range(group.n):
        if g == e:
            continue
        if g in nset:
            if counts[g]:
                return None
        else:
            if lam is None:
                lam = counts[g]
            elif counts[g] != lam:
                return None
    if lam is None:
        return None
    return (group.n // len(nset), len(nset), len(tuple(d)), lam)


def _plain_field_pair_group(q: int) -> Group:
    """GF(q) x GF(q) under plain coordinatewise addition, with the same
    element encoding and labels as semifield_plane_group."""
    f = gf(q)
    n = q * q
    table = [[0] * n for _ in range(n)]
    for a1 in range(q):
        for a2 in range(q):
            for b1 in range(q):
                for b2 in range(q):
                    table[a1 * q + a2][b1 * q + b2] = f.add[a1][b1] * q + f.add[a2][b2]
    labels = [f"({i // q},{i % q})" for i in range(n)]
    return Group(table, labels=labels, name=f"GF({q})^2")


def quadratic_rds(q: int) -> RelativeDifferenceSet:
    """The relative (q,q,q,1) difference set {(x, x^2)} relative to
    N = {(0,y)}: over plain GF(q)^2 for odd q, over the twisted pair group
    for even q.  Verified by exact difference counting."""
    if q * q > MAX_RDS_ORDER:
        raise ValueError(f"group order {q * q} exceeds guard {MAX_RDS_ORDER}")
    f = gf(q)
    group = _plain_field_pair_group(q) if q % 2 else semifield_plane_group(q)
    d = tuple(sorted(x * q + f.mul[x][x] for x in range(q)))
    forb = tuple(range(q))   # (0, y) encodes to y
    params = verify_relative_difference_set(group, forb, d)
    if params != (q, q, q, 1):
        raise AssertionError(f"quadratic set failed RDS verification: {params}")
    return RelativeDifferenceSet(group, forb, d, params)


def affine_plane_minus_pc_graph(q: int) -> Graph:
    """Incidence graph of AG(2,q) minus a parallel class, as a Cayley graph
    over the dihedral-type extension of the quadratic RDS group."""
    if q > 8:
        raise ValueError("affine_plane_minus_pc_graph: q <= 8")
    rds = quadratic_rds(q)
    g = rds.group
    ext = generalized_dihedral_extension(g)
    s = [g.n + x for x in rds.elements]
    return cayley_graph(ext, s, name=f"IG(AG(2,{q})\\pc)")


# -- symplectic generalized quadrangle W(q) -------------------------------------------

def _sym_form(f, x, y) -> int:
    """x1 y2 - x2 y1 + x3 y4 - x4 y3 over GF(q)."""
    t1 = f.sub(f.mul[x[0]][y[1]], f.mul[x[1]][y[0]])
    t2 = f.sub(f.mul[x[2]][y[3]], f.mul[x[3]][y[2]])
    return f.add[t1][t2]


def symplectic_gq_incidence(q: int) -> Graph:
    """Incidence graph of the generalized quadrangle W(q): points are the
    1-spaces of GF(q)^4, lines the totally isotropic 2-spaces under the
    standard alternating form.  Points come first in vertex order."""
    if q not in (2, 3, 4):
        raise ValueError("symplectic_gq_incidence: q in {2,3,4}")
    f = gf(q)
    vecs = [(a, b, c, d) for a in range(q) for b in range(q)
            for c in range(q) for d in range(q)]
    nonzero = [v for v in vecs if any(v)]

    def scale(v, t):
        return tuple(f.mul[t][x] for x in v)

    def normalize(v):
        lead = next(x for x in v if x)
        return scale(v, f.inv[lead])

    points = sorted({normalize(v) for v in nonzero})
    pidx = {p: i for i, p in enumerate(points)}

    def add_vec(u, v):
        return tuple(f.add[a][b] for a, b in zip(u, v))

    lines = set()
    for i, u in enumerate(points):
        for v in points[i + 1:]:
            if _sym_form(f, u, v) != 0:
                continue
            span = set()
            for s in range(q):
                span.add(pidx[normalize(add_vec(u, scale(v, s)))])
            span.add(pidx[v])
            lines.add(tuple(sorted(span)))
    lines = sorted(lines)
    np_, nl = len(points), len(lines)
    edges = [(pt, np_ + j) for j, ln in enumerate(lines) for pt in ln]
    labels = [f"p{''.join(map(str, p))}" for p in points] + \
             [f"l{j}" for j in range(nl)]
    return Graph(np_ + nl, edges, name=f"IG(W({q}))", labels=labels)


def paley_graph(q: int) -> Graph:
    """Paley graph on GF(q), q = 1 mod 4: x ~ y iff x-y is a nonzero square."""
    if q % 4 != 1:
        raise ValueError("paley_graph: q must be 1 mod 4")
    f = gf(q)
    sq = set(f.squares())
    edges = [(a, b) for a in range(q) for b in range(a + 1, q)
             if f.sub(a, b) in sq]
    return Graph(q, edges, name=f"Paley({q})")
