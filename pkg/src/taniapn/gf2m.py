"""Exact arithmetic in GF(2^m) for 1 <= m <= 32.

Elements are plain Python ints in [0, 2^m): bit i is the coefficient of X^i
in the polynomial residue modulo the context's irreducible polynomial.
Addition is XOR; multiplication is shift-and-XOR with on-the-fly reduction.

Every operation flows through a FieldCtx, which is immutable after
construction and safe to share.  Scalar operations use the raw
shift-and-XOR path; bulk (numpy) operations additionally use a lazily
built log/antilog table pair for m <= 16, so the two paths stay
independently testable against each other.

The default modulus for each degree is the lexicographically smallest
irreducible polynomial (smallest when the coefficient bit-vector is read
as an integer), e.g.

    m=1 : X + 1              -> 0x3
    m=2 : X^2 + X + 1        -> 0x7
    m=3 : X^3 + X + 1        -> 0xB
    m=4 : X^4 + X + 1        -> 0x13
    m=8 : X^8+X^4+X^3+X+1    -> 0x11B

The full table is MODULUS_TABLE below.  Any other irreducible polynomial
of the right degree can be supplied explicitly; all counting results are
isomorphism-invariant, the canonical choice only makes element values
reproducible bit-for-bit.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from math import gcd

import numpy as np

from .errors import InvalidParams, ZeroInput, ZeroInverse

# Lexicographically smallest irreducible polynomial of each degree 1..32,
# regenerable via smallest_irreducible() (asserted in the test suite).
MODULUS_TABLE: dict[int, int] = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
    17: 0x20009,
    18: 0x40009,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x100001B,
    25: 0x2000009,
    26: 0x400001B,
    27: 0x8000027,
    28: 0x10000003,
    29: 0x20000005,
    30: 0x40000003,
    31: 0x80000009,
    32: 0x10000008D,
}

MAX_DEGREE = 32
_TABLE_DEGREE_LIMIT = 24  # log/antilog pair built only up to here (~192 MB at 24)


# ---------------------------------------------------------------------------
# GF(2)[X] helpers (polynomials as bit vectors)
# ---------------------------------------------------------------------------

def _poly_mod(a: int, f: int) -> int:
    fb = f.bit_length()
    while a.bit_length() >= fb:
        a ^= f << (a.bit_length() - fb)
    return a


def _poly_mulmod(a: int, b: int, f: int) -> int:
    """a*b mod f in GF(2)[X]; operands already reduced mod f."""
    deg = f.bit_length() - 1
    r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
        if (b >> deg) & 1:
            b ^= f
    return r


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a = _poly_mod(a, b)
        a, b = b, a
    return a


def is_irreducible(f: int) -> bool:
    """Irreducibility of f over GF(2).

    A polynomial of degree m is irreducible iff it has no irreducible
    factor of degree <= m/2, i.e. gcd(X^(2^i) + X, f) = 1 for 1 <= i <= m/2.
    """
    m = f.bit_length() - 1
    if m < 1 or not (f & 1):
        return False
    x = 0b10
    cur = x
    for _ in range(m // 2):
        cur = _poly_mulmod(cur, cur, f)
        if _poly_gcd(cur ^ x, f) != 1:
            return False
    return True


def smallest_irreducible(m: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree m."""
    c = (1 << m) | 1
    while not is_irreducible(c):
        c += 2
    return c


def irreducibles(m: int):
    """Yield the irreducible polynomials of degree m in ascending order."""
    c = (1 << m) | 1
    top = 1 << (m + 1)
    while c < top:
        if is_irreducible(c):
            yield c
        c += 2


# ---------------------------------------------------------------------------
# Field context
# ---------------------------------------------------------------------------

class FieldCtx:
    """GF(2^m) under a fixed irreducible modulus.

    Immutable after construction; all operations are pure, so contexts may
    be shared freely across concurrent workers.
    """

    def __init__(self, m: int, modulus: int | None = None):
        if not 1 <= m <= MAX_DEGREE:
            raise InvalidParams(f"degree m={m} out of range 1..{MAX_DEGREE}")
        if modulus is None:
            modulus = MODULUS_TABLE[m]
        if modulus.bit_length() - 1 != m or not (modulus & 1):
            raise InvalidParams(
                f"modulus 0x{modulus:X} must have degree exactly {m} and constant term 1"
            )
        if not is_irreducible(modulus):
            raise InvalidParams(f"modulus 0x{modulus:X} is reducible over GF(2)")
        self.m = m
        self.modulus = modulus
        self.order = 1 << m

    def __repr__(self) -> str:
        return f"FieldCtx(m={self.m}, modulus=0x{self.modulus:X})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldCtx)
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def contains(self, a: int) -> bool:
        return 0 <= a < self.order

    # -- scalar operations --------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        """Product in GF(2^m): shift-and-XOR with on-the-fly reduction."""
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if (a >> self.m) & 1:
                a ^= self.modulus
        return r

    def pow(self, a: int, e: int) -> int:
        """a^e by square-and-multiply; e >= 0, with 0^0 = 1."""
        if e < 0:
            raise InvalidParams("pow exponent must be non-negative")
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def pow2k(self, a: int, k: int) -> int:
        """Frobenius power a^(2^(k mod m)); negative k means the inverse map."""
        for _ in range(k % self.m):
            a = self.mul(a, a)
        return a

    def inverse(self, a: int) -> int:
        """Multiplicative inverse, a^(2^m - 2)."""
        if a == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def is_cube(self, a: int) -> bool:
        """Whether a is a third power.

        Cubing is a bijection when gcd(3, 2^m - 1) = 1 (m odd), so every
        nonzero element is a cube there; for even m the cubes are exactly
        the kernel of a -> a^((2^m-1)/3).
        """
        if a == 0:
            raise ZeroInput("is_cube is defined on nonzero elements")
        if self.m % 2:
            return True
        return self.pow(a, (self.order - 1) // 3) == 1

    # -- structure ----------------------------------------------------------

    @cached_property
    def generator(self) -> int:
        """Smallest generator of the multiplicative group."""
        n1 = self.order - 1
        if n1 == 1:
            return 1
        primes = [p for p, _ in _factorize(n1)]
        g = 2
        while True:
            if all(self.pow(g, n1 // p) != 1 for p in primes):
                return g
            g += 1

    @cached_property
    def _logexp(self) -> tuple[np.ndarray, np.ndarray]:
        # antilog[i] = g^i for 0 <= i < 2^m - 1; log[0] = -1 sentinel.
        # Built by doubling (block i + 2^j = block i times g^(2^j)), so the
        # construction is m bulk multiplies instead of a 2^m scalar walk.
        n1 = self.order - 1
        g = self.generator
        exp = np.ones(1, dtype=np.uint32)
        j = 0
        while exp.size < n1:
            exp = np.concatenate([exp, self._mul_vec_raw(exp, self.pow2k(g, j))])
            j += 1
        exp = exp[:n1]
        log = np.full(self.order, -1, dtype=np.int64)
        log[exp] = np.arange(n1, dtype=np.int64)
        return exp, log

    # -- bulk (numpy) operations ---------------------------------------------
    #
    # Arguments are integer arrays (or broadcastable scalars) of valid
    # elements; results are uint32 arrays.  For m <= 24 these run on the
    # log/antilog pair, beyond that on vectorized shift-and-XOR.  Scalar
    # operations above never touch the tables, so the two paths stay
    # independently checkable.

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.uint32)

    def _mul_vec_raw(self, a, b) -> np.ndarray:
        """Bulk shift-and-XOR product; independent of the log tables."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        cur = a.copy()
        r = np.zeros_like(cur)
        for i in range(self.m):
            r ^= np.where((b >> i) & 1 == 1, cur, 0)
            cur = cur << 1
            cur ^= np.where((cur >> self.m) & 1 == 1, self.modulus, 0)
        return r.astype(np.uint32)

    def mul_vec(self, a, b) -> np.ndarray:
        if self.m > _TABLE_DEGREE_LIMIT:
            return self._mul_vec_raw(a, b)
        exp, log = self._logexp
        n1 = self.order - 1
        la = log[np.asarray(a, dtype=np.int64)]
        lb = log[np.asarray(b, dtype=np.int64)]
        r = exp[(la + lb) % n1].astype(np.int64)
        return np.where((la < 0) | (lb < 0), 0, r).astype(np.uint32)

    def square_vec(self, a) -> np.ndarray:
        if self.m <= _TABLE_DEGREE_LIMIT:
            exp, log = self._logexp
            n1 = self.order - 1
            la = np.asarray(log[np.asarray(a, dtype=np.int64)])
            r = exp[(2 * la) % n1].astype(np.int64)
            return np.where(la < 0, 0, r).astype(np.uint32)
        return self.mul_vec(a, a)

    def pow2k_vec(self, a, k: int) -> np.ndarray:
        k %= self.m
        if self.m <= _TABLE_DEGREE_LIMIT:
            exp, log = self._logexp
            n1 = self.order - 1
            la = np.asarray(log[np.asarray(a, dtype=np.int64)])
            r = exp[(la * ((1 << k) % n1)) % n1].astype(np.int64)
            return np.where(la < 0, 0, r).astype(np.uint32)
        r = np.asarray(a, dtype=np.int64).astype(np.uint32)
        for _ in range(k):
            r = self.mul_vec(r, r)
        return r

    def pow_vec(self, a, e: int) -> np.ndarray:
        if e < 0:
            raise InvalidParams("pow exponent must be non-negative")
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a, dtype=np.uint32)
        if self.m <= _TABLE_DEGREE_LIMIT:
            exp, log = self._logexp
            n1 = self.order - 1
            la = log[a]
            r = exp[(la * (e % n1)) % n1].astype(np.int64)
            return np.where(la < 0, 0, r).astype(np.uint32)
        r = np.ones_like(a, dtype=np.uint32)
        base = a.astype(np.uint32)
        while e:
            if e & 1:
                r = self.mul_vec(r, base)
            e >>= 1
            if e:
                base = self.mul_vec(base, base)
        return r


@lru_cache(maxsize=None)
def default_ctx(m: int) -> FieldCtx:
    """Shared context for degree m under the canonical modulus."""
    return FieldCtx(m)


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def coprime_residues(m: int) -> list[int]:
    """All k in (0, m) with gcd(k, m) = 1; [1] for m = 1 by convention."""
    if m == 1:
        return [1]
    return [k for k in range(1, m) if gcd(k, m) == 1]
