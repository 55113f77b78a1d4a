"""Distance-regularity: intersection arrays, parameter checks, spectra,
and the number-theoretic Cayley feasibility tests for generalized polygons.

Exact eigenvalue work (rationality tags, integer eigenvalues) runs on the
tridiagonal intersection matrix with integer arithmetic; numeric spectra
come from numpy with documented snap/merge tolerances.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .graphs import Graph, bfs_layers

SNAP_TOL = 1e-6    # |x - round(x)| below this snaps to the integer
MERGE_TOL = 1e-5   # numeric eigenvalues closer than this merge into one


@dataclass(frozen=True)
class IntersectionArray:
    """{b0,...,b_{d-1}; c1,...,c_d} with the usual constraints."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != len(self.c) or not self.b:
            raise ValueError("intersection array needs d >= 1 with |b| == |c|")
        if self.c[0] != 1:
            raise ValueError(f"c1 must be 1, got {self.c[0]}")
        k = self.b[0]
        if any(x < 1 for x in self.b) or any(x < 1 for x in self.c):
            raise ValueError("intersection numbers must be positive")
        if any(self.b[i] < self.b[i + 1] for i in range(len(self.b) - 1)):
            raise ValueError("b_i must be non-increasing")
        if any(self.c[i] > self.c[i + 1] for i in range(len(self.c) - 1)):
            raise ValueError("c_i must be non-decreasing")
        for i in range(1, self.d):
            if self.b[i] + self.c[i - 1] > k:
                raise ValueError(f"a_{i} = k - b_{i} - c_{i} negative")
        if self.c[-1] > k:
            raise ValueError("c_d exceeds the valency")

    @property
    def d(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    @property
    def a(self) -> tuple[int, ...]:
        """a_1..a_d, from a_i = k - b_i - c_i (b_d = 0)."""
        k = self.k
        return tuple(k - (self.b[i + 1] if i + 1 < self.d else 0) - self.c[i]
                     for i in range(self.d))

    def k_seq(self) -> tuple[int, ...]:
        """k_0..k_d (sizes of the distance classes)."""
        ks = [1]
        for i in range(self.d):
            ks.append(ks[-1] * self.b[i] // self.c[i])
            if ks[-1] * self.c[i] != ks[-2] * self.b[i]:
                raise ValueError("k_i not integral; array infeasible")
        return tuple(ks)

    @property
    def n(self) -> int:
        return sum(self.k_seq())

    def odd_girth(self) -> int:
        """2i+1 for the least i with a_i > 0; 0 when bipartite."""
        for i, ai in enumerate(self.a, 1):
            if ai > 0:
                return 2 * i + 1
        return 0

    def even_girth(self) -> int:
        """2i for the least i with c_i > 1; 0 if all c_i = 1.

        Presumes d >= 2: for d = 1 (complete graphs) there is no c_2 to
        inspect, so the formula reports 0 even though K_n contains 4-cycles.
        """
        for i, ci in enumerate(self.c, 1):
            if ci > 1:
                return 2 * i
        return 0

    def girth(self) -> int:
        og = self.odd_girth()
        eg = self.even_girth()
        cands = [x for x in (og, eg) if x > 0]
        return min(cands) if cands else 0

    def is_bipartite_array(self) -> bool:
        return all(x == 0 for x in self.a)

    def is_antipodal_array(self) -> bool:
        return self.k_seq()[-1] == 1 or all(
            self.b[self.d - 1 - i] == self.c[i + 1] for i in range(self.d - 1))

    def __str__(self) -> str:
        return render_array(self)


def render_array(arr: IntersectionArray) -> str:
    return "{" + ",".join(map(str, arr.b)) + ";" + ",".join(map(str, arr.c)) + "}"


def parse_array(s: str) -> IntersectionArray:
    m = re.fullmatch(r"\s*\{([\d,\s]+);([\d,\s]+)\}\s*", s)
    if not m:
        raise ValueError(f"bad intersection array syntax: {s!r}")
    b = tuple(int(x) for x in m.group(1).split(","))
    c = tuple(int(x) for x in m.group(2).split(","))
    return IntersectionArray(b, c)


# -- distance-regularity check ---------------------------------------------------

@dataclass
class DRGResult:
    array: Optional[IntersectionArray]
    witness: Optional[tuple] = None   # (x, y, i, kind, got, expected)

    @property
    def is_drg(self) -> bool:
        return self.array is not None


def check_distance_regular(g: Graph) -> DRGResult:
    """Verify constancy of (c_i, a_i, b_i) over every vertex pair by BFS.

    Returns the array, or a witness (x, y, i, kind, got, expected) for the
    first violated count.  Errors on disconnected or empty input.
    """
    if g.n == 0:
        raise ValueError("check_distance_regular: empty graph")
    layer_sets = []
    ecc0 = None
    for x in range(g.n):
        layers = bfs_layers(g, x)
        covered = 0
        for L in layers:
            covered |= L
        if covered != (1 << g.n) - 1:
            raise ValueError("check_distance_regular: graph is disconnected")
        layer_sets.append(layers)
        if ecc0 is None:
            ecc0 = len(layers)
        elif len(layers) != ecc0:
            return DRGResult(None, (0, x, len(layers) - 1, "eccentricity",
                                    len(layers) - 1, ecc0 - 1))
    d = ecc0 - 1
    if d == 0:
        raise ValueError("check_distance_regular: single-vertex graph")
    b = [None] * d
    c = [None] * (d + 1)
    a = [None] * (d + 1)
    rows = g.rows
    for x in range(g.n):
        layers = layer_sets[x]
        for i in range(1, d + 1):
            below = layers[i - 1]
            here = layers[i]
            above = layers[i + 1] if i + 1 <= d else 0
            m = here
            while m:
                t = m & -m
                y = t.bit_length() - 1
                m ^= t
                r = rows[y]
                ci = (r & below).bit_count()
                ai = (r & here).bit_count()
                bi = (r & above).bit_count()
                if c[i] is None:
                    c[i], a[i] = ci, ai
                    if i < d:
                        b[i] = bi
                elif ci != c[i]:
                    return DRGResult(None, (x, y, i, "c", ci, c[i]))
                elif ai != a[i]:
                    return DRGResult(None, (x, y, i, "a", ai, a[i]))
                elif i < d and bi != b[i]:
                    return DRGResult(None, (x, y, i, "b", bi, b[i]))
    k = g.degree(0)
    if any(deg != k for deg in g.degrees()):
        v = next(v for v in range(g.n) if g.degree(v) != k)
        return DRGResult(None, (0, v, 0, "valency", g.degree(v), k))
    barr = tuple([k] + [int(x) for x in b[1:]])
    carr = tuple(int(x) for x in c[1:])
    return DRGResult(IntersectionArray(barr, carr))


def srg_parameters(arr: IntersectionArray) -> tuple[int, int, int, int]:
    """(n, k, lambda, mu) for a diameter-2 array."""
    if arr.d != 2:
        raise ValueError(f"srg_parameters: need diameter 2, got {arr.d}")
    return (arr.n, arr.k, arr.a[0], arr.c[1])


# -- spectra ----------------------------------------------------------------------

@dataclass(frozen=True)
class ArrayEigenvalue:
    value: float
    rational: bool
    exact: Optional[int] = None   # set when rational


def intersection_matrix(arr: IntersectionArray) -> list[list[int]]:
    """Tridiagonal (d+1)x(d+1) matrix L1 with rows (c_i, a_i, b_i)."""
    d = arr.d
    A = [[0] * (d + 1) for _ in range(d + 1)]
    aa = (0,) + arr.a          # a_0 = 0
    cc = (0,) + arr.c
    bb = arr.b + (0,)
    for i in range(d + 1):
        A[i][i] = aa[i]
        if i > 0:
            A[i][i - 1] = cc[i]
        if i < d:
            A[i][i + 1] = bb[i]
    # row i of L1 is (c_i, a_i, b_i) acting on distance classes: entry (i,j)
    # nonzero only for |i-j| <= 1; the transpose convention does not change
    # the spectrum, which is all we expose.
    return A


def _char_poly(arr: IntersectionArray) -> list[int]:
    """Characteristic polynomial of the intersection matrix, exact integer
    coefficients (ascending), via the tridiagonal three-term recurrence."""
    d = arr.d
    aa = (0,) + arr.a
    cc = (0,) + arr.c
    bb = arr.b + (0,)
    # p_0 = 1, p_1 = x - a_0, p_{i+1} = (x - a_i) p_i - b_{i-1} c_i p_{i-1}
    p_prev = [1]
    p = [-aa[0], 1]
    for i in range(1, d + 1):
        shifted = [0] + p                      # x * p
        scaled = [-aa[i] * t for t in p]       # -a_i p
        q = [s + (scaled[j] if j < len(scaled) else 0) for j, s in enumerate(shifted)]
        w = bb[i - 1] * cc[i]
        for j, t in enumerate(p_prev):
            q[j] -= w * t
        p_prev, p = p, q
    return p


def _integer_roots(poly: list[int]) -> list[int]:
    """Distinct integer roots of an integer polynomial (ascending coeffs)."""
    coeffs = list(poly)
    roots = []
    while coeffs and coeffs[0] == 0:
        if 0 not in roots:
            roots.append(0)
        coeffs = coeffs[1:]
        # deflating x | p repeatedly is fine; multiplicity not tracked
    if not coeffs:
        return sorted(roots)
    const = abs(coeffs[0])
    cands = set()
    f = 1
    while f * f <= const:
        if const % f == 0:
            cands.update((f, -f, const // f, -(const // f)))
        f += 1
    for r in sorted(cands):
        v = 0
        for cf in reversed(coeffs):
            v = v * r + cf
        if v == 0 and r not in roots:
            roots.append(r)
    return sorted(roots)


def spectrum_of_array(arr: IntersectionArray) -> list[ArrayEigenvalue]:
    """The d+1 distinct eigenvalues of the intersection matrix, descending,
    each tagged rational (integer, exact) or irrational.

    For integer tridiagonal matrices of this shape every rational eigenvalue
    is an integer root of the characteristic polynomial (monic, integer
    coefficients), so the tag is exact, not numeric.
    """
    d = arr.d
    A = np.zeros((d + 1, d + 1))
    aa = (0,) + arr.a
    cc = (0,) + arr.c
    bb = arr.b + (0,)
    for i in range(d + 1):
        A[i, i] = aa[i]
        if i > 0:
            A[i, i - 1] = cc[i]
        if i < d:
            A[i, i + 1] = bb[i]
    vals = sorted(np.linalg.eigvals(A).real, reverse=True)
    int_roots = set(_integer_roots(_char_poly(arr)))
    out = []
    for v in vals:
        r = round(v)
        if r in int_roots and abs(v - r) < 1e-7 * max(1.0, abs(v)) + SNAP_TOL:
            out.append(ArrayEigenvalue(float(r), True, int(r)))
        else:
            out.append(ArrayEigenvalue(float(v), False, None))
    return out


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]        # descending
    multiplicities: tuple[int, ...]

    def as_pairs(self) -> list[tuple[float, int]]:
        return list(zip(self.values, self.multiplicities))

    def contains(self, x: float, tol: float = SNAP_TOL) -> bool:
        return any(abs(v - x) <= tol for v in self.values)


def spectrum_numeric(g: Graph, snap_tol: float = SNAP_TOL,
                     merge_tol: float = MERGE_TOL) -> Spectrum:
    """Adjacency spectrum via numpy, snapped to integers within snap_tol and
    merged within merge_tol."""
    A = np.zeros((g.n, g.n))
    for u in range(g.n):
        for v in g.neighbors(u):
            A[u, v] = 1.0
    vals = np.linalg.eigvalsh(A)
    snapped = []
    for v in vals:
        r = round(float(v))
        snapped.append(float(r) if abs(v - r) <= snap_tol else float(v))
    snapped.sort(reverse=True)
    merged: list[list[float]] = []
    for v in snapped:
        if merged and abs(merged[-1][0] - v) <= merge_tol:
            merged[-1].append(v)
        else:
            merged.append([v])
    values = tuple(grp[0] for grp in merged)
    mults = tuple(len(grp) for grp in merged)
    return Spectrum(values, mults)


# -- Cayley feasibility for generalized polygons ----------------------------------

@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    reasons: tuple[str, ...]

    def __str__(self) -> str:
        if self.feasible:
            return "feasible (no obstruction found)"
        return "infeasible: " + "; ".join(self.reasons)


def gq_cayley_feasible(s: int) -> Feasibility:
    """Incidence graph of a GQ(s,s): Cayley only if gcd(s+1, 6) = 1."""
    if s < 2:
        raise ValueError("gq_cayley_feasible: s >= 2")
    reasons = []
    if (s + 1) % 2 == 0:
        reasons.append("2 divides s+1")
    if (s + 1) % 3 == 0:
        reasons.append("3 divides s+1")
    return Feasibility(not reasons, tuple(reasons))


def gh_cayley_feasible(s: int) -> Feasibility:
    """Incidence graph of a GH(s,s): Cayley only if s = 0 mod 6 and
    s+1 != 0 mod 5."""
    if s < 2:
        raise ValueError("gh_cayley_feasible: s >= 2")
    reasons = []
    if s % 6 != 0:
        reasons.append("s not multiple of 6")
    if (s + 1) % 5 == 0:
        reasons.append("5 divides s+1")
    return Feasibility(not reasons, tuple(reasons))


# -- Benson-type trace certificate -------------------------------------------------

@dataclass(frozen=True)
class BensonTrace:
    s: int
    fixed_points: int
    adjacent_moves: int    # x with x != x^g and x ~ x^g (collinear moves)
    trace: int             # tr Q(A+I) = fixed + adjacent moves
    congruent: bool        # trace = 1 (mod s)


def benson_trace(point_graph: Graph, s: int, perm: Sequence[int]) -> BensonTrace:
    """tr Q(A+I) for an automorphism of the collinearity graph of a
    generalized hexagon of order (s,s); must be = 1 mod s."""
    n = point_graph.n
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValueError("benson_trace: perm is not a permutation of the vertices")
    for u in range(n):
        for v in point_graph.neighbors(u):
            if not point_graph.has_edge(perm[u], perm[v]):
                raise ValueError(f"benson_trace: perm is not an automorphism "
                                 f"(edge {u}~{v} maps to non-edge)")
    fixed = sum(1 for v in range(n) if perm[v] == v)
    moves = sum(1 for v in range(n) if perm[v] != v and point_graph.has_edge(v, perm[v]))
    tr = fixed + moves
    return BensonTrace(s, fixed, moves, tr, tr % s == 1 % s)


# -- index-2 coset quotient obstruction ---------------------------------------------

@dataclass(frozen=True)
class HalvingObstruction:
    k: int
    admissible_m: tuple[int, ...]
    obstructed: bool
    detail: str


def halving_obstruction(arr: IntersectionArray) -> HalvingObstruction:
    """Which quotient matrices [[m, k-m], [k-m, m]] over an index-2 subgroup
    are compatible with the spectrum.

    The quotient eigenvalues are k and 2m-k; 2m-k must be an eigenvalue of
    the array (so an integer one).  m = k is ruled out for connected graphs
    (S would sit inside the subgroup); m = 0 needs the graph bipartite.
    When no m survives, no group with an index-2 subgroup can host the
    graph as a Cayley graph.
    """
    k = arr.k
    ints = {ev.exact for ev in spectrum_of_array(arr) if ev.rational}
    bip = arr.is_bipartite_array()
    ok = []
    for m in range(0, k):
        if m == 0 and not bip:
            continue
        if (2 * m - k) in ints:
            ok.append(m)
    obstructed = not ok
    if obstructed:
        detail = (f"no m in 0..{k - 1} gives quotient eigenvalue 2m-{k} in the "
                  f"integer spectrum {sorted(ints)}; no group of order {arr.n} "
                  f"with an index-2 subgroup admits this graph")
    else:
        detail = f"admissible diagonal values m: {ok}"
    return HalvingObstruction(k, tuple(ok), obstructed, detail)
