"""Undirected simple graphs on bitset adjacency rows, with BFS metrics,
derived-graph operations, and graph6 / adjacency-list serialization.

Rows are Python ints used as bitsets (bit v of rows[u] set iff u ~ v), which
keeps common-neighbor counting a single AND + popcount.  Intended scale is
n <= 4096.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

MAX_VERTICES = 4096
UNREACHED = -1  # sentinel inside BFS; public tables use n for "disconnected"


class Graph:
    """Immutable simple graph; vertices 0..n-1."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 name: str = "", labels: Optional[Sequence[str]] = None):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        self.n = n
        self.name = name or f"graph<{n}>"
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.rows = rows
        self.labels = list(labels) if labels is not None else None

    @classmethod
    def from_rows(cls, rows: Sequence[int], name: str = "",
                  labels: Optional[Sequence[str]] = None) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(rows)
        g.name = name or f"graph<{g.n}>"
        g.rows = list(rows)
        g.labels = list(labels) if labels is not None else None
        for u, r in enumerate(g.rows):
            if r >> g.n:
                raise ValueError(f"row {u} has bits beyond vertex range")
            if (r >> u) & 1:
                raise ValueError(f"loop at vertex {u} not allowed")
        for u in range(g.n):
            for v in range(u):
                if ((g.rows[u] >> v) & 1) != ((g.rows[v] >> u) & 1):
                    raise ValueError(f"asymmetric adjacency at ({u},{v})")
        return g

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    out.append((u, v))
                r >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1 if self.n else True

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.rows)))

    def __repr__(self) -> str:
        return f"Graph({self.name}, n={self.n}, m={self.edge_count()})"


def _bits(x: int) -> list[int]:
    out = []
    v = 0
    while x:
        t = x & -x
        v = t.bit_length() - 1
        out.append(v)
        x ^= t
    return out


# -- BFS and metrics ----------------------------------------------------------

def bfs_distances(g: Graph, root: int) -> list[int]:
    """Distances from root; unreachable vertices get g.n as sentinel."""
    dist = [g.n] * g.n
    dist[root] = 0
    frontier = 1 << root
    seen = frontier
    d = 0
    rows = g.rows
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        nxt &= ~seen
        seen |= nxt
        for v in _bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def bfs_layers(g: Graph, root: int) -> list[int]:
    """Distance layers from root as bitmasks; layer i = vertices at distance i."""
    layers = [1 << root]
    seen = 1 << root
    rows = g.rows
    while True:
        nxt = 0
        for v in _bits(layers[-1]):
            nxt |= rows[v]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)


@dataclass
class Metrics:
    n: int
    degrees: list[int]
    connected: bool
    bipartite: bool
    diameter: int               # n if disconnected
    girth: int                  # 0 if acyclic
    odd_girth: int              # 0 if none
    even_girth: int             # 0 if none
    distance_table: list[list[int]] = field(repr=False, default_factory=list)


def distance_table(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return bfs_distances(g, 0).count(g.n) == 0


def is_bipartite(g: Graph) -> bool:
    return _two_coloring(g) is not None


def _two_coloring(g: Graph) -> Optional[list[int]]:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def girth(g: Graph) -> int:
    """Length of a shortest cycle; 0 if the graph is acyclic."""
    best = 0
    for r in range(g.n):
        dist = [UNREACHED] * g.n
        parent = [UNREACHED] * g.n
        dist[r] = 0
        q = [r]
        head = 0
        while head < len(q):
            u = q[head]; head += 1
            if best and 2 * dist[u] >= best:
                break
            for v in g.neighbors(u):
                if dist[v] == UNREACHED:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
                elif parent[u] != v and parent[v] != u:
                    c = dist[u] + dist[v] + 1
                    if not best or c < best:
                        best = c
    return best


def odd_girth(g: Graph) -> int:
    """Length of a shortest odd cycle; 0 if bipartite.

    BFS on the bipartite double cover: the shortest odd closed walk through
    r is d((r,even),(r,odd)), and its minimum over r is the odd girth.
    """
    best = 0
    n = g.n
    for r in range(n):
        dist = {(r, 0): 0}
        q = [(r, 0)]
        head = 0
        while head < len(q):
            (u, p) = q[head]; head += 1
            d = dist[(u, p)]
            if best and d + 1 >= best:
                break
            for v in g.neighbors(u):
                key = (v, p ^ 1)
                if key not in dist:
                    dist[key] = d + 1
                    q.append(key)
        got = dist.get((r, 1))
        if got and (not best or got < best):
            best = got
    return best


def even_girth(g: Graph, max_len: Optional[int] = None) -> int:
    """Length of a shortest even cycle; 0 if none up to max_len (default n).

    Bipartite graphs short-circuit to girth().  Otherwise iterative
    deepening over even lengths L: a cycle of length L through edge (u,v)
    is an internally disjoint path pair from u and from v meeting at a
    common endpoint, found by meet-in-the-middle over simple paths.
    Processing edges in order and deleting each after its pass keeps every
    even cycle attributable to its first edge.
    """
    if g.n == 0:
        return 0
    if is_bipartite(g):
        return girth(g)
    cap = max_len if max_len is not None else g.n
    edges = g.edges()
    L = 4
    while L <= cap:
        rows = list(g.rows)
        for (u, v) in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            if _has_path_pair(rows, u, v, L - 1):
                return L
        L += 2
    return 0


def _simple_paths(rows: list[int], start: int, length: int, banned: int) -> dict[int, list[int]]:
    """Endpoints -> list of vertex-bitmasks of simple paths of given length."""
    out: dict[int, list[int]] = {}
    stack = [(start, (1 << start) | banned, 0)]
    while stack:
        (v, used, d) = stack.pop()
        if d == length:
            out.setdefault(v, []).append(used & ~banned)
            continue
        r = rows[v] & ~used
        while r:
            t = r & -r
            w = t.bit_length() - 1
            r ^= t
            stack.append((w, used | t, d + 1))
    return out


def _has_path_pair(rows: list[int], u: int, v: int, total: int) -> bool:
    """Internally disjoint u-path and v-path with equal endpoints, lengths
    summing to `total` (so the cycle through the deleted edge has total+1)."""
    a = total // 2
    b = total - a
    pu = _simple_paths(rows, u, a, 1 << v)
    pv = _simple_paths(rows, v, b, 1 << u)
    for x, masks_u in pu.items():
        masks_v = pv.get(x)
        if not masks_v:
            continue
        overlap = (1 << u) | (1 << v) | (1 << x)
        for mu in masks_u:
            for mv in masks_v:
                if mu & mv & ~overlap == 0 and (mu & mv) == (1 << x):
                    return True
    return False


def graph_metrics(g: Graph, with_table: bool = True) -> Metrics:
    table = distance_table(g)
    connected = all(g.n not in row for row in table) if g.n else True
    diam = max((max(row) for row in table), default=0)
    return Metrics(
        n=g.n,
        degrees=g.degrees(),
        connected=connected,
        bipartite=is_bipartite(g),
        diameter=diam,
        girth=girth(g),
        odd_girth=odd_girth(g),
        even_girth=even_girth(g),
        distance_table=table if with_table else [],
    )


# -- derived graphs -----------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = [(full & ~r) & ~(1 << v) for v, r in enumerate(g.rows)]
    return Graph.from_rows(rows, name=f"complement({g.name})")


def line_graph(g: Graph) -> Graph:
    """Vertices are edges of g in lexicographic (min,max) order."""
    es = g.edges()
    idx = {e: i for i, e in enumerate(es)}
    lg = Graph(len(es), name=f"L({g.name})")
    rows = [0] * len(es)
    incident: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(es):
        incident.setdefault(u, []).append(i)
        incident.setdefault(v, []).append(i)
    for lst in incident.values():
        for i, j in combinations(lst, 2):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    lab = [f"{u}-{v}" for (u, v) in es]
    return Graph.from_rows(rows, name=f"L({g.name})", labels=lab)


def bipartite_double(g: Graph) -> Graph:
    """Tensor product with K2: (v,0) ~ (w,1) iff v ~ w; side 0 first."""
    n = g.n
    rows = [0] * (2 * n)
    for u in range(n):
        rows[u] = g.rows[u] << n
        rows[n + u] = g.rows[u]
    return Graph.from_rows(rows, name=f"double({g.name})")


def distance_i_graph(g: Graph, i: int) -> Graph:
    table = distance_table(g)
    diam = max(max(row) for row in table) if g.n else 0
    if not 1 <= i <= diam:
        raise ValueError(f"distance-{i} graph: i outside 1..diameter={diam}")
    rows = [0] * g.n
    for u in range(g.n):
        acc = 0
        for v in range(g.n):
            if table[u][v] == i:
                acc |= 1 << v
        rows[u] = acc
    return Graph.from_rows(rows, name=f"dist{i}({g.name})")


def halved_graph(g: Graph, part: int = 0) -> Graph:
    """Distance-2 graph restricted to one color class of a connected
    bipartite graph.  part 0 is the class containing vertex 0."""
    if part not in (0, 1):
        raise ValueError("halved_graph: part must be 0 or 1")
    if not is_connected(g):
        raise ValueError("halved_graph: graph must be connected")
    coloring = _two_coloring(g)
    if coloring is None:
        raise ValueError("halved_graph: graph is not bipartite")
    keep = [v for v in range(g.n) if coloring[v] == part]
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        acc = 0
        for u in g.neighbors(v):
            acc |= g.rows[u]
        acc &= ~(1 << v)
        r = 0
        for w in _bits(acc):
            r |= 1 << pos[w]
        rows[pos[v]] = r
    lab = [str(v) for v in keep]
    return Graph.from_rows(rows, name=f"halved({g.name},{part})", labels=lab)


def antipodal_quotient(g: Graph) -> Graph:
    """Folded graph: contract the distance-d graph's components, which must
    all be cliques (antipodality)."""
    table = distance_table(g)
    if any(g.n in row for row in table):
        raise ValueError("antipodal_quotient: graph must be connected")
    d = max(max(row) for row in table)
    classes = []
    assigned = [-1] * g.n
    for v in range(g.n):
        if assigned[v] != -1:
            continue
        cls = [v] + [w for w in range(g.n) if table[v][w] == d]
        for x in cls:
            for y in cls:
                if x != y and table[x][y] != d:
                    raise ValueError(
                        f"antipodal_quotient: distance-{d} classes are not cliques "
                        f"(vertices {x},{y} at distance {table[x][y]})")
            if assigned[x] != -1:
                raise ValueError("antipodal_quotient: distance-d graph has overlapping classes")
            assigned[x] = len(classes)
        classes.append(sorted(cls))
    k = len(classes)
    rows = [0] * k
    for (u, v) in g.edges():
        a, b = assigned[u], assigned[v]
        if a != b:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    lab = [",".join(str(x) for x in cls) for cls in classes]
    return Graph.from_rows(rows, name=f"folded({g.name})", labels=lab)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    keep = list(vertices)
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        r = 0
        for w in g.neighbors(v):
            if w in pos:
                r |= 1 << pos[w]
        rows[pos[v]] = r
    lab = [str(v) for v in keep]
    return Graph.from_rows(rows, name=f"induced({g.name})", labels=lab)


# -- named constructions -------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2), name=f"K{n}")


def complete_multipartite(parts: int, size: int) -> Graph:
    n = parts * size
    edges = [(u, v) for u, v in combinations(range(n), 2) if u // size != v // size]
    return Graph(n, edges, name=f"K_{parts}x{size}")


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def lcf_graph(pattern: Sequence[int], reps: int, name: str = "") -> Graph:
    """Cubic Hamiltonian graph from LCF notation: a cycle on
    len(pattern)*reps vertices plus the chord i ~ i + pattern[i mod len].
    The chord set must be involutive, which the 3-regularity check enforces."""
    n = len(pattern) * reps
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    for i in range(n):
        j = (i + pattern[i % len(pattern)]) % n
        edges.add(tuple(sorted((i, j))))
    g = Graph(n, edges, name=name or f"LCF{list(pattern)}^{reps}")
    if any(d != 3 for d in g.degrees()):
        raise ValueError("LCF pattern does not describe a cubic graph")
    return g


def kneser_graph(m: int, k: int) -> Graph:
    """K(m,k): k-subsets of an m-set, adjacent when disjoint."""
    from math import comb
    if not 0 < k < m:
        raise ValueError(f"kneser_graph: need 0 < k < m, got ({m},{k})")
    if comb(m, k) > MAX_VERTICES:
        raise ValueError(f"kneser_graph({m},{k}): too many vertices")
    subsets = [frozenset(c) for c in combinations(range(m), k)]
    masks = [sum(1 << x for x in s) for s in subsets]
    n = len(subsets)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if masks[i] & masks[j] == 0:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    lab = ["".join(str(x) for x in sorted(s)) for s in subsets]
    return Graph.from_rows(rows, name=f"K({m},{k})", labels=lab)


# -- graph6 and adjacency lists -------------------------------------------------

def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding (upper triangle, column-major bit stream)."""
    n = g.n
    if n > 258047:
        raise ValueError("graph6: n too large")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    bits = []
    for v in range(1, n):
        col = g.rows[v]
        for u in range(v):
            bits.append((col >> u) & 1)
    while len(bits) % 6:
        bits.append(0)
    chunks = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        chunks.append(chr(x + 63))
    return head + "".join(chunks)


def parse_graph6(line: str, name: str = "") -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("graph6: empty input")
    if s[0] == ":":
        raise ValueError("graph6: sparse6 input not supported")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise ValueError("graph6: byte out of range")
    if s[0] == "~":
        if len(data) < 4:
            raise ValueError("graph6: truncated header")
        if s[1] == "~":
            raise ValueError("graph6: n > 258047 not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6: expected {need} body bytes for n={n}, got {len(body)}")
    bits = []
    for x in body:
        for shift in range(5, -1, -1):
            bits.append((x >> shift) & 1)
    rows = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            i += 1
    return Graph.from_rows(rows, name=name or "graph6")


def parse_adjacency_list(text: str, name: str = "") -> Graph:
    """One 'u v' edge per line; blank lines and '#' comments ignored."""
    edges = []
    top = -1
    for ln_no, ln in enumerate(text.splitlines(), 1):
        ln = ln.split("#")[0].strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"adjacency list line {ln_no}: expected 'u v', got {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        top = max(top, u, v)
    return Graph(top + 1, edges, name=name or "edges")


def format_adjacency_list(g: Graph) -> str:
    return "\n".join(f"{u} {v}" for u, v in g.edges()) + "\n"
