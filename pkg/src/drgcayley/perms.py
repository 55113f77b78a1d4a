"""Permutations as image tuples and deterministic Schreier-Sims.

Composition convention: compose(p, q) applies q first, so
compose(p, q)[x] = p[q[x]].  A transversal element u_x at level i maps
base[i] to x.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_order(p: Perm) -> int:
    n = len(p)
    seen = [False] * n
    order = 1
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        if ln > 1:
            a, b = order, ln
            while b:
                a, b = b, a % b
            order = order // a * ln
    return order


def cycle_type(p: Perm) -> tuple[int, ...]:
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        out.append(ln)
    return tuple(sorted(out))


def _orbit_transversal(gens: Sequence[Perm], pt: int, n: int) -> dict[int, Perm]:
    tr = {pt: identity_perm(n)}
    queue = [pt]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        ux = tr[x]
        for g in gens:
            y = g[x]
            if y not in tr:
                tr[y] = compose(g, ux)
                queue.append(y)
    return tr


class PermutationGroup:
    """Group generated by permutations, with a base and strong generating
    set computed by the deterministic Schreier-Sims algorithm."""

    def __init__(self, degree: int, generators: Iterable[Perm],
                 base_hint: Sequence[int] = ()):
        self.degree = degree
        ident = identity_perm(degree)
        gens = []
        for g in generators:
            t = tuple(g)
            if len(t) != degree or sorted(t) != list(range(degree)):
                raise ValueError("generator is not a permutation of 0..n-1")
            if t != ident and t not in gens:
                gens.append(t)
        self.generators = gens
        self.base: list[int] = []
        self._sgens: list[list[Perm]] = []
        self._trans: list[dict[int, Perm]] = []
        self._hint = tuple(base_hint)
        self._build()

    # -- construction ---------------------------------------------------------

    def _new_base_point(self, g: Perm) -> int:
        used = set(self.base)
        for x in self._hint:
            if g[x] != x and x not in used:
                return x
        for x in range(self.degree):
            if g[x] != x and x not in used:
                return x
        raise AssertionError("identity offered as strong generator")

    def _recompute(self, i: int) -> None:
        self._trans[i] = _orbit_transversal(self._sgens[i], self.base[i], self.degree)

    def _strip(self, g: Perm, i: int) -> tuple[Perm, int]:
        for j in range(i, len(self.base)):
            x = g[self.base[j]]
            if x not in self._trans[j]:
                return g, j
            g = compose(invert(self._trans[j][x]), g)
        return g, len(self.base)

    def _build(self) -> None:
        ident = identity_perm(self.degree)
        for x in self._hint:
            if x not in self.base and any(g[x] != x for g in self.generators):
                self.base.append(x)
        for g in self.generators:
            if all(g[b] == b for b in self.base):
                self.base.append(self._new_base_point(g))
        if not self.base and self.generators:
            self.base.append(self._new_base_point(self.generators[0]))
        if not self.base:
            self.base = []
        self._sgens = [[g for g in self.generators
                        if all(g[b] == b for b in self.base[:i])]
                       for i in range(len(self.base))]
        self._trans = [{} for _ in self.base]
        for i in range(len(self.base)):
            self._recompute(i)

        i = len(self.base) - 1
        while i >= 0:
            advanced = False
            for x in sorted(self._trans[i]):
                ux = self._trans[i][x]
                for g in list(self._sgens[i]):
                    gx = g[x]
                    schreier = compose(invert(self._trans[i][gx]), compose(g, ux))
                    if schreier == ident:
                        continue
                    h, j = self._strip(schreier, i + 1)
                    if h == ident:
                        continue
                    if j == len(self.base):
                        self.base.append(self._new_base_point(h))
                        self._sgens.append([])
                        self._trans.append({})
                    for level in range(i + 1, j + 1):
                        self._sgens[level].append(h)
                        self._recompute(level)
                    i = j
                    advanced = True
                    break
                if advanced:
                    break
            if not advanced:
                i -= 1

    # -- queries ---------------------------------------------------------------

    def order(self) -> int:
        out = 1
        for tr in self._trans:
            out *= len(tr)
        return out

    def __contains__(self, g) -> bool:
        t = tuple(g)
        if len(t) != self.degree:
            return False
        h, j = self._strip(t, 0)
        return h == identity_perm(self.degree)

    def orbit(self, pt: int) -> list[int]:
        return sorted(_orbit_transversal(self.generators, pt, self.degree))

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit(0)) == self.degree

    def coset_rep(self, level: int, point: int) -> Optional[Perm]:
        """Transversal element at the level mapping base[level] to point."""
        return self._trans[level].get(point)

    def orbit_points(self, level: int) -> list[int]:
        return sorted(self._trans[level])

    def stabilizer_size(self, level: int) -> int:
        out = 1
        for tr in self._trans[level:]:
            out *= len(tr)
        return out

    def stabilizer_elements(self, level: int = 1) -> Iterator[Perm]:
        """All elements fixing base[:level] pointwise, in a deterministic
        order.  Size is the product of the deeper transversal sizes."""
        if level >= len(self.base):
            yield identity_perm(self.degree)
            return
        for x in sorted(self._trans[level]):
            u = self._trans[level][x]
            for h in self.stabilizer_elements(level + 1):
                yield compose(u, h)

    def elements(self) -> Iterator[Perm]:
        yield from self.stabilizer_elements(0)

    def __repr__(self) -> str:
        return (f"PermutationGroup(degree={self.degree}, order={self.order()}, "
                f"base={self.base})")
