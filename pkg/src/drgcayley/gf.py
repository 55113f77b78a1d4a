"""Arithmetic tables for the small finite fields GF(q), q <= 16.

Prime-power fields use one fixed irreducible polynomial per order so that
element encodings are stable across runs:

    GF(4):  x^2 + x + 1        GF(8):  x^3 + x + 1
    GF(9):  x^2 + 1            GF(16): x^4 + x + 1

Elements are encoded as integers 0..q-1 whose base-p digits (little-endian)
are the polynomial coefficients, so the encoding of sum c_i x^i is
sum c_i p^i.  For prime q this is plain arithmetic mod p.
"""

from __future__ import annotations

from functools import lru_cache

# Little-endian coefficient lists, constant term first, including the
# leading 1 of the modulus.
_IRREDUCIBLE = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 1, 1),  # x^2 + x + 2 over GF(5)
}

_PRIMES = (2, 3, 5, 7, 11, 13)


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in _PRIMES:
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError(f"q={q} is not a prime power")
            return p, k
    raise ValueError(f"q={q} is not a supported prime power")


class GF:
    """GF(q) with dense add/mul tables; q <= 25."""

    def __init__(self, q: int):
        if q < 2 or q > 25:
            raise ValueError(f"GF(q) supported for 2 <= q <= 25, got {q}")
        p, k = _factor_prime_power(q)
        if k > 1 and q not in _IRREDUCIBLE:
            raise ValueError(f"no fixed irreducible polynomial for q={q}")
        self.q = q
        self.p = p
        self.k = k
        self.add = [[0] * q for _ in range(q)]
        self.mul = [[0] * q for _ in range(q)]
        for a in range(q):
            da = self._digits(a)
            for b in range(q):
                db = self._digits(b)
                self.add[a][b] = self._encode([(x + y) % p for x, y in zip(da, db)])
                self.mul[a][b] = self._poly_mul(da, db)
        self.neg = [self.add[a].index(0) for a in range(q)]
        self.inv = [0] * q
        for a in range(1, q):
            self.inv[a] = self.mul[a].index(1)

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits: list[int]) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def _poly_mul(self, da: list[int], db: list[int]) -> int:
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        if k > 1:
            mod = _IRREDUCIBLE[self.q]
            # reduce: x^k = -(mod without leading term)
            for i in range(2 * k - 2, k - 1, -1):
                c = prod[i]
                if c:
                    prod[i] = 0
                    for j in range(k):
                        prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
        return self._encode(prod[: k] if k > 1 else [prod[0] % p])

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul[r][a]
        return r

    def squares(self) -> list[int]:
        """Nonzero squares of the field, sorted."""
        return sorted({self.mul[a][a] for a in range(1, self.q)})

    def elements(self) -> range:
        return range(self.q)


@lru_cache(maxsize=None)
def gf(q: int) -> GF:
    return GF(q)
