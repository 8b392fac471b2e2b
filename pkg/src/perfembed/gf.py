"""Arithmetic in GF(q).

Prime fields use residue arithmetic. The listed prime-power fields are
built as GF(p)[x] modulo a fixed Conway polynomial; an element
``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` is encoded as the integer
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exceptions import UnsupportedOrderError

# Coefficients low degree first, monic.
CONWAY_POLYNOMIALS: dict[int, tuple[int, int, tuple[int, ...]]] = {
    4: (2, 2, (1, 1, 1)),  # x^2 + x + 1
    8: (2, 3, (1, 1, 0, 1)),  # x^3 + x + 1
    9: (3, 2, (2, 2, 1)),  # x^2 + 2x + 2
    16: (2, 4, (1, 1, 0, 0, 1)),  # x^4 + x + 1
    25: (5, 2, (2, 4, 1)),  # x^2 + 4x + 2
    27: (3, 3, (1, 2, 0, 1)),  # x^3 + 2x + 1
}

MAX_PRIME = 1 << 16
# Prime fields up to this order also get explicit tables.
TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """Immutable description of GF(q) with precomputed tables.

    Tables are ``None`` only for prime fields larger than ``TABLE_LIMIT``,
    where every operation falls back to residue arithmetic.
    """

    q: int
    p: int
    k: int
    irreducible: tuple[int, ...] | None
    add_table: np.ndarray | None
    mul_table: np.ndarray | None
    neg_table: np.ndarray | None
    inv_table: np.ndarray | None
    exp_table: np.ndarray | None
    log_table: np.ndarray | None

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q})"

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def nonzero(self) -> range:
        return range(1, self.q)

    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.q:
                raise ValueError(f"element {x} out of range for GF({self.q})")

    # scalar operations -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.k == 1:
            return (a + b) % self.q
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        self._check(a)
        if self.k == 1:
            return (-a) % self.q
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.k == 1:
            return (a * b) % self.q
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        if self.inv_table is not None:
            return int(self.inv_table[a])
        return pow(a, -1, self.q)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        result = 1
        base = a
        if e < 0:
            base, e = self.inv(a), -e
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # elementwise array operations --------------------------------------

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a + b) % self.q
        return self.add_table[a, b]

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.k == 1:
            return (-a) % self.q
        return self.neg_table[a]

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a * b) % self.q
        return self.mul_table[a, b]

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of 0")
        if self.inv_table is not None:
            return self.inv_table[a]
        return np.array([pow(int(x), -1, self.q) for x in a.ravel()], dtype=np.int64).reshape(a.shape)

    def dot(self, a, b) -> int:
        """Inner product of two equal-length vectors."""
        prods = self.vmul(a, b)
        if self.k == 1:
            return int(prods.sum() % self.q)
        acc = 0
        for v in prods.tolist():
            acc = int(self.add_table[acc, v])
        return acc

    def kernel_tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Tables handed to the compiled kernels.

        Prime fields get empty tables, which tells the kernels to use
        residue arithmetic.
        """
        if self.k == 1:
            return _EMPTY2, _EMPTY2, _EMPTY1
        return self.add_table, self.mul_table, self.neg_table


_EMPTY2 = np.zeros((0, 0), dtype=np.int64)
_EMPTY1 = np.zeros(0, dtype=np.int64)


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p: int) -> int:
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


def _poly_mulmod(a: list[int], b: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    k = len(mod) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # reduce using the monic modulus
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * mod[i]) % p
    return prod[:k]


def _prime_tables(q: int):
    r = np.arange(q, dtype=np.int64)
    add = (r[:, None] + r[None, :]) % q
    mul = (r[:, None] * r[None, :]) % q
    neg = (-r) % q
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = pow(a, -1, q)
    return add, mul, neg, inv


def _extension_tables(p: int, k: int, mod: tuple[int, ...]):
    q = p**k
    digits = [_digits(x, p, k) for x in range(q)]
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(a, q):
            s = _undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p)
            m = _undigits(_poly_mulmod(digits[a], digits[b], mod, p), p)
            add[a, b] = add[b, a] = s
            mul[a, b] = mul[b, a] = m
    neg = np.array([_undigits([(-x) % p for x in digits[a]], p) for a in range(q)], dtype=np.int64)
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
    return add, mul, neg, inv


def _log_tables(q: int, mul: np.ndarray):
    for g in range(2, q) if q > 2 else (1,):
        exp = [1]
        x = g
        while x != 1:
            exp.append(x)
            x = int(mul[x, g])
        if len(exp) == q - 1:
            break
    else:  # pragma: no cover - every finite field has a primitive element
        raise RuntimeError(f"no primitive element found for GF({q})")
    exp_t = np.array(exp, dtype=np.int64)
    log_t = np.full(q, -1, dtype=np.int64)
    log_t[exp_t] = np.arange(q - 1)
    return exp_t, log_t


@lru_cache(maxsize=None)
def create_field(q: int) -> FieldSpec:
    """Return GF(q) for a prime ``q <= 2**16`` or q in 4, 8, 9, 16, 25, 27."""
    q = int(q)
    if q in CONWAY_POLYNOMIALS:
        p, k, mod = CONWAY_POLYNOMIALS[q]
        add, mul, neg, inv = _extension_tables(p, k, mod)
        exp_t, log_t = _log_tables(q, mul)
        return FieldSpec(q, p, k, mod, add, mul, neg, inv, exp_t, log_t)
    if is_prime(q) and q <= MAX_PRIME:
        if q <= TABLE_LIMIT:
            add, mul, neg, inv = _prime_tables(q)
            exp_t, log_t = _log_tables(q, mul)
            return FieldSpec(q, q, 1, None, add, mul, neg, inv, exp_t, log_t)
        return FieldSpec(q, q, 1, None, None, None, None, None, None, None)
    raise UnsupportedOrderError(
        f"unsupported field order {q}: need a prime <= {MAX_PRIME} or one of "
        f"{sorted(CONWAY_POLYNOMIALS)}"
    )
