"""Cayley graphs over explicit groups and the (G,S)-level machinery:
distance sets, coset quotient matrices, girth lemma predicates, the
H-union-K decomposition for generalized-polygon line graphs, and an
exhaustive connection-set search.

Convention throughout: vertices are group element indices and a ~ b iff
a·b^{-1} is in S, so the neighbors of a are S·a and right translations
v -> vg are automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .drg import IntersectionArray, check_distance_regular
from .graphs import Graph, bfs_layers, girth as graph_girth, is_connected
from .groups import Group, closure, is_normal, is_subgroup, right_cosets, subgroups_of_order


@dataclass(frozen=True)
class ConnectionSet:
    group: Group
    elements: tuple[int, ...]

    def __post_init__(self):
        g = self.group
        elems = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elems)
        if g.identity in elems:
            raise ValueError("connection set contains the identity")
        for x in elems:
            if not 0 <= x < g.n:
                raise ValueError(f"element index {x} out of range")
            if g.inv(x) not in elems:
                raise ValueError(
                    f"connection set not inverse-closed: {g.labels[x]} in S "
                    f"but {g.labels[g.inv(x)]} not")

    @classmethod
    def from_labels(cls, group: Group, spec: str) -> "ConnectionSet":
        from .groups import parse_connection_labels
        return cls(group, parse_connection_labels(group, spec))

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def generates(self) -> bool:
        return len(closure(self.group, self.elements)) == self.group.n

    def labels(self) -> list[str]:
        return [self.group.labels[x] for x in self.elements]

    def __str__(self) -> str:
        return ",".join(self.labels())


def _as_elements(group: Group, s) -> tuple[int, ...]:
    if isinstance(s, ConnectionSet):
        if s.group is not group and s.group.table != group.table:
            raise ValueError("connection set belongs to a different group")
        return s.elements
    items = list(s) if not isinstance(s, str) else s
    if isinstance(s, str) or any(isinstance(x, str) for x in items):
        from .groups import parse_connection_labels
        return tuple(parse_connection_labels(group, items))
    return ConnectionSet(group, tuple(items)).elements


def cayley_graph(group: Group, s, name: str = "") -> Graph:
    """Cay(G,S) on element indices; a ~ b iff a·b^{-1} in S."""
    elems = _as_elements(group, s)
    rows = [0] * group.n
    for a in range(group.n):
        r = 0
        for x in elems:
            r |= 1 << group.mul(x, a)
        rows[a] = r
    return Graph.from_rows(rows, name=name or f"Cay({group.name},|S|={len(elems)})",
                           labels=group.labels)


# -- distance sets -----------------------------------------------------------------

@dataclass(frozen=True)
class DistanceSets:
    sets: tuple[tuple[int, ...], ...]   # S_0 .. S_d as sorted index tuples
    n_d: tuple[int, ...]                # S_d together with the identity
    n_d_is_subgroup: bool

    @property
    def diameter(self) -> int:
        return len(self.sets) - 1


def distance_sets(group: Group, s) -> DistanceSets:
    """S_0={e}, S_1=S, S_{i+1} = S·S_i minus (S_i and S_{i-1}); checked
    against the BFS classes of the identity vertex of Cay(G,S)."""
    elems = _as_elements(group, s)
    e = group.identity
    out = [(e,), tuple(sorted(elems))]
    prev, cur = {e}, set(elems)
    covered = {e} | cur
    while len(covered) < group.n:
        nxt = set()
        for x in elems:
            for y in cur:
                nxt.add(group.mul(x, y))
        nxt -= cur | prev
        if not nxt:
            raise ValueError("Cay(G,S) is disconnected: S does not generate G")
        out.append(tuple(sorted(nxt)))
        prev, cur = cur, nxt
        covered |= nxt
    g = cayley_graph(group, elems)
    layers = bfs_layers(g, e)
    assert len(layers) == len(out), "distance sets disagree with BFS layer count"
    for i, cls in enumerate(out):
        mask = 0
        for x in cls:
            mask |= 1 << x
        assert mask == layers[i], f"distance set S_{i} disagrees with BFS"
    nd = tuple(sorted(set(out[-1]) | {e}))
    return DistanceSets(tuple(out), nd, is_subgroup(group, nd))


# -- normal coset quotients ----------------------------------------------------------

@dataclass(frozen=True)
class QuotientMatrix:
    parts: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.parts)

    def eigenvalues(self) -> list[float]:
        return sorted(np.linalg.eigvals(np.array(self.entries, dtype=float)).real,
                      reverse=True)


def coset_quotient(group: Group, s, subgroup_elems: Iterable[int],
                   check_spectrum: bool = True, tol: float = 1e-6) -> QuotientMatrix:
    """Quotient matrix of the equitable partition of Cay(G,S) into cosets of
    a normal subgroup H: Q[i][j] = |S ∩ H·c_i·c_j^{-1}|.

    Entries are verified against per-vertex neighbor counts in the graph,
    and each eigenvalue of Q is verified to be an eigenvalue of the graph
    within tol.
    """
    elems = _as_elements(group, s)
    h = tuple(sorted(set(subgroup_elems)))
    if not is_subgroup(group, h):
        raise ValueError("quotient needs a subgroup")
    if not is_normal(group, h):
        raise ValueError("quotient needs a normal subgroup")
    parts = right_cosets(group, h)
    reps = [min(p) for p in parts]
    sset = set(elems)
    q = []
    for ci in reps:
        row = []
        for cj in reps:
            w = group.mul(ci, group.inv(cj))
            row.append(sum(1 for hh in h if group.mul(hh, w) in sset))
        q.append(tuple(row))
    k = len(elems)
    for row in q:
        if sum(row) != k:
            raise AssertionError("quotient row sum differs from |S|")
    g = cayley_graph(group, elems)
    part_masks = []
    for p in parts:
        m = 0
        for x in p:
            m |= 1 << x
        part_masks.append(m)
    for i, p in enumerate(parts):
        for v in p:
            for j, m in enumerate(part_masks):
                if (g.rows[v] & m).bit_count() != q[i][j]:
                    raise AssertionError(
                        f"vertex {v} has {(g.rows[v] & m).bit_count()} neighbors in "
                        f"part {j}, quotient predicts {q[i][j]}")
    qm = QuotientMatrix(tuple(tuple(p) for p in parts), tuple(q))
    if check_spectrum:
        A = np.zeros((g.n, g.n))
        for u in range(g.n):
            for v in g.neighbors(u):
                A[u, v] = 1.0
        spec = np.linalg.eigvalsh(A)
        for ev in qm.eigenvalues():
            if min(abs(spec - ev)) > tol:
                raise AssertionError(
                    f"quotient eigenvalue {ev} is not an eigenvalue of the graph")
    return qm


# -- girth lemmas ---------------------------------------------------------------------

@dataclass(frozen=True)
class GirthLemmas:
    abelian_forces_4cycle: bool
    girth: int
    order_m_cycle_partitions: tuple[tuple[int, int, tuple[tuple[int, ...], ...]], ...]
    # entries (s, order m, coset partition); present only when girth > 4


def girth_lemma_predicates(group: Group, s) -> GirthLemmas:
    """The two girth lemmas as checkable facts about (G,S).

    abelian_forces_4cycle: G abelian with |S| > 2, so the graph contains a
    4-cycle and girth <= 4.  For girth > 4, every s in S of order m > 2
    partitions G into right cosets of <s>, each inducing an m-cycle; the
    induced-cycle assertion is checked, not assumed.
    """
    elems = _as_elements(group, s)
    if not elems:
        raise ValueError("empty connection set")
    g = cayley_graph(group, elems)
    gg = graph_girth(g)
    forces = group.is_abelian and len(elems) > 2
    partitions = []
    if gg > 4:
        for x in elems:
            m = group.order_of(x)
            if m <= 2:
                continue
            if m < gg:
                raise AssertionError(
                    f"element of order {m} in S contradicts girth {gg}")
            cyc = closure(group, (x,))
            cosets = tuple(tuple(cs) for cs in right_cosets(group, cyc))
            for cs in cosets:
                sub = set(cs)
                deg = [sum(1 for w in g.neighbors(v) if w in sub) for v in cs]
                if any(dv != 2 for dv in deg):
                    raise AssertionError(
                        f"coset of <{group.labels[x]}> does not induce a cycle")
            partitions.append((x, m, cosets))
    return GirthLemmas(forces, gg, tuple(partitions))


# -- H ∪ K decomposition (generalized polygon line graphs) ---------------------------

@dataclass(frozen=True)
class HKDecomposition:
    found: bool
    h: Optional[tuple[int, ...]]
    k: Optional[tuple[int, ...]]
    closure_condition_holds: bool


def hk_decomposition(group: Group, s, q: int,
                     gon: Optional[int] = None) -> HKDecomposition:
    """Search for subgroups H, K with |H| = |K| = q+1, H ∩ K = {e} and
    S = (H ∪ K) \\ {e}; independently evaluate the closure condition
    "<a> ⊆ S ∪ {e} for every a in S of order 2i with i >= gon".

    gon is the polygon parameter d (line graph of the incidence graph of a
    generalized d-gon); defaults to the diameter of Cay(G,S).
    """
    elems = _as_elements(group, s)
    if len(elems) != 2 * q:
        raise ValueError(f"|S| = {len(elems)} but expected 2q = {2 * q}")
    e = group.identity
    if gon is None:
        gon = distance_sets(group, elems).diameter
    closed = set(elems) | {e}
    cond = True
    for x in elems:
        m = group.order_of(x)
        if m % 2 == 0 and m // 2 >= gon:
            if not set(closure(group, (x,))) <= closed:
                cond = False
                break
    cands = [tuple(hh) for hh in subgroups_of_order(group, q + 1)
             if set(hh) <= closed]
    for i, h1 in enumerate(cands):
        for h2 in cands[i:]:
            if set(h1) & set(h2) != {e}:
                continue
            if set(h1) | set(h2) == closed:
                return HKDecomposition(True, h1, h2, cond)
    return HKDecomposition(False, None, None, cond)


# -- connection-set search -------------------------------------------------------------

MAX_SEARCH_VALENCY = 12


def connection_set_search(group: Group, target: IntersectionArray,
                          limit: Optional[int] = None) -> list[ConnectionSet]:
    """All inverse-closed identity-free S with Cay(G,S) distance-regular
    with the target array, in lexicographic element order.

    Empty result is a certificate that no such S exists over this group.
    Pruning: the abelian 4-cycle lemma when the target has no 4-cycle, the
    element-order lemma when target girth > 4, and partial a_1/c_2 counts.
    """
    k = target.k
    if k > MAX_SEARCH_VALENCY:
        raise ValueError(f"valency {k} exceeds search guard {MAX_SEARCH_VALENCY}")
    if group.n != target.n:
        raise ValueError(f"group order {group.n} != array vertex count {target.n}")
    tg = target.girth()
    a1 = target.a[0]
    c2 = target.c[1] if target.d >= 2 else None
    has_4cycle = a1 >= 2 or (c2 is not None and c2 >= 2) or (target.d == 1 and target.n >= 4)
    if group.is_abelian and k > 2 and not has_4cycle:
        return []

    e = group.identity
    reps = []
    for x in range(group.n):
        if x == e or group.inv(x) < x:
            continue
        m = group.order_of(x)
        if tg > 4 and 2 < m < tg:
            continue
        reps.append(x)

    sols: list[ConnectionSet] = []

    def consistent(partial: set[int], frontier_done: bool) -> bool:
        # counts |S ∩ S·y| only ever grow as S grows, so exceeding the
        # target count is final
        for y in partial:
            common = sum(1 for x in partial if group.mul(x, y) in partial)
            if common > a1:
                return False
        if c2 is not None:
            seen = set()
            for x in partial:
                for y in partial:
                    z = group.mul(x, y)
                    if z == e or z in partial or z in seen:
                        continue
                    seen.add(z)
                    common = sum(1 for w in partial if group.mul(w, z) in partial)
                    if common > max(a1, c2):
                        return False
        return True

    def extend(idx: int, chosen: list[int], size: int):
        if limit is not None and len(sols) >= limit:
            return
        if size == k:
            cs = ConnectionSet(group, tuple(chosen))
            g = cayley_graph(group, cs)
            if not is_connected(g):
                return
            res = check_distance_regular(g)
            if res.is_drg and res.array == target:
                sols.append(cs)
            return
        for j in range(idx, len(reps)):
            x = reps[j]
            xin = group.inv(x)
            add = [x] if xin == x else [x, xin]
            if size + len(add) > k:
                continue
            nxt = chosen + add
            if consistent(set(nxt), False):
                extend(j + 1, nxt, size + len(add))
            if limit is not None and len(sols) >= limit:
                return

    extend(0, [], 0)
    sols.sort(key=lambda cs: cs.elements)
    return sols
