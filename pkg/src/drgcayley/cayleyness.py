"""Deciding Cayley-ness of a graph: automorphism groups and canonical
forms by individualization-refinement, regular-subgroup search over the
automorphism group, and witness extraction to an explicit group table.

The refinement is iterated neighbor-color counting; correctness never
depends on its strength, only completeness of the backtracking.  Budgets
raise BudgetExceeded so an aborted search is never mistaken for a verdict.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .cayley import ConnectionSet, cayley_graph
from .graphs import Graph
from .groups import Group
from .perms import (Perm, PermutationGroup, compose, identity_perm, invert)

AUT_BUDGET = 60.0
SEARCH_BUDGET = 300.0


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, seconds: float):
        super().__init__(f"{what} exceeded budget of {seconds:.0f}s")
        self.what = what
        self.seconds = seconds


# -- color refinement ------------------------------------------------------------

def _refine(g: Graph, colors: tuple[int, ...]) -> tuple[int, ...]:
    """Iterated neighbor-color-count refinement to a stable partition.
    Color ids are ranks of (old color, count vector) signatures, so the
    result is invariant under relabeling."""
    n = g.n
    rows = g.rows
    ncolors = len(set(colors))
    while True:
        classes: dict[int, int] = {}
        for v, c in enumerate(colors):
            classes[c] = classes.get(c, 0) | (1 << v)
        masks = [classes[c] for c in sorted(classes)]
        sigs = [(colors[v], tuple((rows[v] & m).bit_count() for m in masks))
                for v in range(n)]
        uniq = sorted(set(sigs))
        if len(uniq) == ncolors:
            remap = {s: i for i, s in enumerate(uniq)}
            return tuple(remap[s] for s in sigs)
        remap = {s: i for i, s in enumerate(uniq)}
        colors = tuple(remap[s] for s in sigs)
        ncolors = len(uniq)


def _individualize(colors: tuple[int, ...], v: int) -> tuple[int, ...]:
    """Split v out of its class, ordered before the rest of the class."""
    out = []
    for u, c in enumerate(colors):
        if c < colors[v]:
            out.append(2 * c)
        elif c > colors[v]:
            out.append(2 * c + 1)
        elif u == v:
            out.append(2 * c)
        else:
            out.append(2 * c + 1)
    return tuple(out)


def _target_cell(colors: tuple[int, ...]) -> Optional[list[int]]:
    """Vertices of the first smallest non-singleton class; None if discrete."""
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    best = None
    for c in sorted(by_color):
        cell = by_color[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _leaf_perm(colors: tuple[int, ...]) -> Perm:
    """Discrete coloring -> permutation sending vertex v to its color rank."""
    return tuple(colors)


def _leaf_bytes(g: Graph, colors: tuple[int, ...]) -> bytes:
    n = g.n
    nbytes = (n + 7) // 8
    new_rows = [0] * n
    for v in range(n):
        r = g.rows[v]
        nr = 0
        while r:
            t = r & -r
            u = t.bit_length() - 1
            r ^= t
            nr |= 1 << colors[u]
        new_rows[colors[v]] = nr
    return b"".join(x.to_bytes(nbytes, "little") for x in new_rows)


def _node_invariant(colors: tuple[int, ...]) -> tuple:
    sizes: dict[int, int] = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    return tuple(sizes[c] for c in sorted(sizes))


class _Backjump(Exception):
    def __init__(self, depth: int):
        self.depth = depth


class _IRSearch:
    """One individualization-refinement run over a graph: collects
    automorphism generators and the canonical leaf.  An initial coloring
    restricts everything to color-preserving maps."""

    def __init__(self, g: Graph, budget: float,
                 initial_colors: Optional[tuple[int, ...]] = None):
        self.g = g
        self.n = g.n
        self.initial = initial_colors
        self.deadline = time.monotonic() + budget
        self.budget = budget
        self.autos: list[Perm] = []
        self.zeta: Optional[tuple] = None        # (inv_path, bytes, perm)
        self.best: Optional[tuple] = None
        self.nodes = 0

    def _check_budget(self):
        self.nodes += 1
        if self.nodes % 64 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("automorphism search", self.budget)

    def run(self):
        start = self.initial if self.initial is not None else (0,) * self.n
        colors = _refine(self.g, start) if self.n else ()
        path: list[int] = []
        self._descend(colors, path, ())
        return self

    def _prefix_orbit_reps(self, cell: list[int], path: list[int]) -> list[int]:
        """Collapse the target cell by orbits of discovered automorphisms
        fixing the individualized prefix pointwise."""
        fixers = [a for a in self.autos if all(a[v] == v for v in path)]
        if not fixers:
            return cell
        cellset = set(cell)
        parent = {v: v for v in cell}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in fixers:
            for v in cell:
                w = a[v]
                if w in cellset:
                    rv, rw = find(v), find(w)
                    if rv != rw:
                        parent[max(rv, rw)] = min(rv, rw)
        return [v for v in cell if find(v) == v]

    def _descend(self, colors: tuple[int, ...], path: list[int], inv: tuple):
        self._check_budget()
        inv = inv + (_node_invariant(colors),)
        depth = len(path)
        on_zeta = self.zeta is None or inv == self.zeta[0][:depth + 1]
        cmp_best = 0
        if self.best is not None:
            b = self.best[0][:depth + 1]
            cmp_best = -1 if inv < b else (1 if inv > b else 0)
        if not on_zeta and cmp_best < 0:
            return
        cell = _target_cell(colors)
        if cell is None:
            self._leaf(colors, path, inv)
            return
        i = 0
        while i < len(cell):
            reps = self._prefix_orbit_reps(cell, path)
            if cell[i] not in reps:
                i += 1
                continue
            v = cell[i]
            child = _refine(self.g, _individualize(colors, v))
            path.append(v)
            try:
                self._descend(child, path, inv)
            except _Backjump as bj:
                if bj.depth < depth:
                    path.pop()
                    raise
            finally:
                if path and path[-1] == v:
                    path.pop()
            i += 1

    def _leaf(self, colors: tuple[int, ...], path: list[int], inv: tuple):
        perm = _leaf_perm(colors)
        data = _leaf_bytes(self.g, colors)
        if self.zeta is None:
            self.zeta = (inv, data, perm, tuple(path))
            if self.best is None or (inv, data) > (self.best[0], self.best[1]):
                self.best = (inv, data, perm, tuple(path))
            return
        matched = None
        if inv == self.zeta[0] and data == self.zeta[1]:
            matched = self.zeta
        elif self.best is not None and inv == self.best[0] and data == self.best[1]:
            matched = self.best
        if matched is not None:
            auto = compose(invert(matched[2]), perm)
            if auto != identity_perm(self.n) and auto not in self.autos:
                self.autos.append(auto)
                common = 0
                other = matched[3]
                p = tuple(path)
                while common < min(len(p), len(other)) and p[common] == other[common]:
                    common += 1
                raise _Backjump(common)
            return
        if self.best is None or (inv, data) > (self.best[0], self.best[1]):
            self.best = (inv, data, perm, tuple(path))


def _run_ir(g: Graph, budget: float,
            initial_colors: Optional[tuple[int, ...]] = None) -> _IRSearch:
    s = _IRSearch(g, budget, initial_colors)
    try:
        s.run()
    except _Backjump:
        raise AssertionError("backjump escaped the search tree")
    for a in s.autos:
        for u in range(g.n):
            for v in g.neighbors(u):
                if not g.has_edge(a[u], a[v]):
                    raise AssertionError("search produced a non-automorphism")
    return s


_ir_cache: dict[tuple, _IRSearch] = {}


def _ir_for(g: Graph, budget: float,
            initial_colors: Optional[tuple[int, ...]] = None) -> _IRSearch:
    key = (g.n, tuple(g.rows), initial_colors)
    hit = _ir_cache.get(key)
    if hit is not None:
        return hit
    s = _run_ir(g, budget, initial_colors)
    if len(_ir_cache) > 64:
        _ir_cache.clear()
    _ir_cache[key] = s
    return s


def automorphism_group(g: Graph, budget: float = AUT_BUDGET,
                       base_hint: Sequence[int] = (0,)) -> PermutationGroup:
    """Full automorphism group with a Schreier-Sims base starting at the
    hinted vertices.  Raises BudgetExceeded rather than guessing."""
    s = _ir_for(g, budget)
    return PermutationGroup(g.n, s.autos, base_hint=base_hint)


def canonical_form(g: Graph, budget: float = AUT_BUDGET) -> str:
    """Certificate string equal between two graphs iff they are isomorphic."""
    s = _ir_for(g, budget)
    if s.best is None:
        return f"n={g.n};empty"
    return f"n={g.n};" + s.best[1].hex()


def marked_certificate(g: Graph, marked: Sequence[int],
                       budget: float = AUT_BUDGET) -> str:
    """Certificate for the graph with an ordered tuple of marked vertices.
    Two (graph, tuple) pairs get equal certificates iff some isomorphism
    carries one marked tuple onto the other in order; with g fixed that
    means an automorphism."""
    colors = [0] * g.n
    for rank, v in enumerate(marked):
        if colors[v]:
            raise ValueError("marked vertices must be distinct")
        colors[v] = rank + 1
    s = _ir_for(g, budget, tuple(colors))
    return f"n={g.n};m={len(marked)};" + (s.best[1].hex() if s.best else "empty")


def aut_order_by_stabilizer_chain(g: Graph, budget: float = AUT_BUDGET) -> int:
    """|Aut(g)| computed purely from marked certificates via
    orbit-stabilizer, with no automorphism discovery involved.  Slow;
    meant as an independent cross-check for the group engine."""
    prefix: list[int] = []
    order = 1
    remaining = list(range(g.n))
    while remaining:
        colors = [0] * g.n
        for rank, u in enumerate(prefix):
            colors[u] = rank + 1
        if len(set(_refine(g, tuple(colors)))) == g.n:
            break    # refinement is Aut-invariant: Stab(prefix) is trivial
        v = remaining[0]
        ref = marked_certificate(g, prefix + [v], budget)
        orbit = [w for w in remaining
                 if marked_certificate(g, prefix + [w], budget) == ref]
        order *= len(orbit)
        prefix.append(v)
        remaining.remove(v)
    return order


def canonical_relabeling(g: Graph, budget: float = AUT_BUDGET) -> Perm:
    s = _ir_for(g, budget)
    if s.best is None:
        return ()
    return s.best[2]


def brute_force_automorphisms(g: Graph) -> list[Perm]:
    """Exhaustive backtracking oracle, for cross-checking at small n."""
    n = g.n
    if n > 16:
        raise ValueError("brute force oracle capped at n=16")
    deg = g.degrees()
    out = []
    img = [-1] * n
    used = [False] * n

    def place(v: int):
        if v == n:
            out.append(tuple(img))
            return
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != g.has_edge(img[u], w):
                    ok = False
                    break
            if ok:
                img[v] = w
                used[w] = True
                place(v + 1)
                used[w] = False
                img[v] = -1

    place(0)
    return out


# -- regular subgroups and Cayley verdicts ---------------------------------------

def _closure_bounded(base_elems: Sequence[Perm], extra: Perm, n: int,
                     degree: int) -> Optional[list[Perm]]:
    """Closure of the given permutations under composition, or None as
    soon as it exceeds n elements."""
    elems = set(base_elems)
    elems.add(extra)
    frontier = list(elems)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(elems):
                for c in (compose(a, b), compose(b, a)):
                    if c not in elems:
                        elems.add(c)
                        nxt.append(c)
                        if len(elems) > n:
                            return None
        frontier = nxt
    return sorted(elems)


def _semiregular(elems: Sequence[Perm], degree: int) -> bool:
    ident = identity_perm(degree)
    for p in elems:
        if p == ident:
            continue
        if any(p[i] == i for i in range(degree)):
            return False
    return True


def regular_subgroup_search(aut: PermutationGroup, g: Graph,
                            budget: float = SEARCH_BUDGET,
                            base_vertex: int = 0) -> Optional[list[Perm]]:
    """A subgroup of aut acting sharply transitively on the vertices, as a
    sorted element list, or None when exhaustive search rules one out.

    Completeness: any regular R contains, for the least vertex v outside
    the current orbit of the base, an element mapping base to v; closures
    stay inside R, so the branch containing R is never pruned (pruning
    only discards closures that are too big, non-semiregular, or of order
    not dividing n, none of which can hold for subgroups of R).
    """
    n = g.n
    if n == 0:
        return None
    deadline = time.monotonic() + budget
    if len(aut.orbit(base_vertex)) != n:
        return None
    if aut.base[0] != base_vertex:
        raise ValueError("automorphism group base must start at the base vertex")

    ident = identity_perm(n)
    stab = sorted(aut.stabilizer_elements(1))

    def semiregular_element(p: Perm) -> bool:
        # in a free action every cycle of p has length equal to its order
        seen = [False] * n
        length = 0
        for start in range(n):
            if seen[start]:
                continue
            ln = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = p[x]
                ln += 1
            if length == 0:
                length = ln
                if n % ln:
                    return False
            elif ln != length:
                return False
        return True

    def candidates(v: int) -> list[Perm]:
        rep = aut.coset_rep(0, v)
        return sorted(p for s in stab
                      if semiregular_element(p := compose(rep, s)))

    counter = [0]

    def extend(elems: list[Perm], orb: set[int]) -> Optional[list[Perm]]:
        counter[0] += 1
        if counter[0] % 16 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded("regular subgroup search", budget)
        if len(elems) == n:
            return elems
        v = min(u for u in range(n) if u not in orb)
        for sigma in candidates(v):
            grown = _closure_bounded(elems, sigma, n, n)
            if grown is None or n % len(grown) != 0:
                continue
            if not _semiregular(grown, n):
                continue
            res = extend(grown, {p[base_vertex] for p in grown})
            if res is not None:
                return res
        return None

    witness = extend([ident], {base_vertex})
    if witness is None:
        return None
    assert len(witness) == n and _semiregular(witness, n)
    assert {p[base_vertex] for p in witness} == set(range(n))
    return witness


@dataclass
class CayleyVerdict:
    kind: str                  # "yes" | "no" | "unknown"
    reason: str
    group: Optional[Group] = None
    connection_set: Optional[ConnectionSet] = None

    @property
    def is_cayley(self) -> Optional[bool]:
        return None if self.kind == "unknown" else self.kind == "yes"

    def __str__(self) -> str:
        return f"{self.kind} ({self.reason})"


def witness_group(witness: Sequence[Perm], g: Graph,
                  base_vertex: int = 0) -> tuple[Group, ConnectionSet]:
    """Convert a sharply transitive automorphism set into a group table on
    the vertex indices plus the connection set of base neighbors.

    With sigma_v the witness element sending the base to v, the table is
    table[u][v] = sigma_v(u) (the opposite of composition order), which
    makes a ~ b in the graph iff a·b^{-1} lands in S = N(base); the
    reconstruction is asserted.
    """
    n = g.n
    by_image = {p[base_vertex]: p for p in witness}
    if sorted(by_image) != list(range(n)):
        raise ValueError("witness is not sharply transitive")
    table = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            table[u][v] = by_image[v][u]
    labels = g.labels if g.labels else [str(v) for v in range(n)]
    grp = Group(table, labels=labels, name=f"VertexGroup({g.name})")
    s = ConnectionSet(grp, tuple(g.neighbors(base_vertex)))
    rebuilt = cayley_graph(grp, s)
    if rebuilt.rows != g.rows:
        raise AssertionError("witness reconstruction mismatch")
    return grp, s


def is_cayley(g: Graph, budget: float = SEARCH_BUDGET,
              aut_budget: float = AUT_BUDGET) -> CayleyVerdict:
    """yes with a replayable (Group, ConnectionSet), no with the exhaustion
    reason, or unknown when a budget ran out."""
    try:
        aut = automorphism_group(g, budget=aut_budget)
    except BudgetExceeded as ex:
        return CayleyVerdict("unknown", str(ex))
    if not aut.is_transitive():
        return CayleyVerdict("no", "not vertex-transitive")
    try:
        witness = regular_subgroup_search(aut, g, budget=budget)
    except BudgetExceeded as ex:
        return CayleyVerdict("unknown", str(ex))
    if witness is None:
        return CayleyVerdict("no", "exhaustive")
    grp, s = witness_group(witness, g)
    return CayleyVerdict("yes", f"regular group of order {grp.n}", grp, s)
