"""Root analysis of the trinomial P(X) = X^(2^k+1) + alpha*X + beta.

The admissible set

    Phi(m) = { beta : X^(2^k+1) + X + beta has no root in GF(2^m) }

is enumerated by the image-complement trick: beta has a root iff
beta = x^(2^k+1) + x for some x, so one O(2^m) pass over x marks every
rooted beta and the unmarked values are Phi(m).  Phi(m) is closed under
the squaring map and decomposes into Frobenius orbits {b, b^2, b^4, ...}
whose lengths divide m; orbit representatives are the numerically
smallest members.

count_roots() stays a literal exhaustive scan on purpose: it is the
independent oracle the closed-form counting module is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import (
    InvalidK,
    InvalidParams,
    NotFrobeniusClosed,
    TooLarge,
    ZeroAlpha,
)
from .gf2m import FieldCtx

_SCAN_DEGREE_LIMIT = 28  # 2^m-element scans stay feasible up to here


@dataclass(frozen=True, eq=False)
class BetaSet:
    """Phi(m) for one (m, k): the beta values whose trinomial is rootless."""

    m: int
    k: int
    elements: np.ndarray  # sorted uint32, no duplicates

    def __len__(self) -> int:
        return int(self.elements.size)

    def __iter__(self):
        return iter(int(b) for b in self.elements)

    def __contains__(self, beta: int) -> bool:
        i = int(np.searchsorted(self.elements, beta))
        return i < self.elements.size and int(self.elements[i]) == beta

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "elements": [f"0x{int(b):X}" for b in self.elements],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BetaSet":
        elements = np.array(sorted(int(b, 16) for b in data["elements"]),
                            dtype=np.uint32)
        return cls(m=int(data["m"]), k=int(data["k"]), elements=elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BetaSet)
            and (self.m, self.k) == (other.m, other.k)
            and bool(np.array_equal(self.elements, other.elements))
        )


@dataclass(frozen=True)
class OrbitDecomposition:
    """Frobenius-orbit partition: (smallest member, orbit length) pairs."""

    orbits: list[tuple[int, int]]  # sorted by representative
    total: int

    def __len__(self) -> int:
        return len(self.orbits)

    def lengths(self) -> list[int]:
        return sorted(length for _, length in self.orbits)

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "orbits": [
                {"representative": f"0x{r:X}", "length": length}
                for r, length in self.orbits
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "OrbitDecomposition":
        return cls(
            orbits=[(int(o["representative"], 16), int(o["length"]))
                    for o in data["orbits"]],
            total=int(data["total"]),
        )


def _check_k(k: int, ctx: FieldCtx) -> int:
    k %= ctx.m
    if gcd(k, ctx.m) != 1:
        raise InvalidK(f"k={k} not coprime to m={ctx.m}")
    return k


def count_roots(k: int, alpha: int, beta: int, ctx: FieldCtx) -> int:
    """Exact number of x with x^(2^k+1) + alpha*x + beta = 0, by full scan."""
    k = _check_k(k, ctx)
    if not (ctx.contains(alpha) and ctx.contains(beta)):
        raise InvalidParams("alpha/beta out of field range")
    if ctx.m > _SCAN_DEGREE_LIMIT:
        raise TooLarge(f"exhaustive root scan capped at m={_SCAN_DEGREE_LIMIT}")
    x = ctx.elements()
    vals = ctx.mul_vec(ctx.pow2k_vec(x, k), x) ^ ctx.mul_vec(x, alpha) ^ np.uint32(beta)
    return int((vals == 0).sum())


def phi_set(k: int, ctx: FieldCtx) -> BetaSet:
    """Phi(m) via the image complement of x -> x^(2^k+1) + x."""
    k = _check_k(k, ctx)
    if ctx.m > _SCAN_DEGREE_LIMIT:
        raise TooLarge(f"phi_set scan capped at m={_SCAN_DEGREE_LIMIT}")
    x = ctx.elements()
    image = ctx.mul_vec(ctx.pow2k_vec(x, k), x) ^ x
    rooted = np.zeros(ctx.order, dtype=bool)
    rooted[image] = True
    return BetaSet(m=ctx.m, k=k, elements=np.nonzero(~rooted)[0].astype(np.uint32))


def frobenius_orbits(s, ctx: FieldCtx) -> OrbitDecomposition:
    """Partition a squaring-closed set into orbits {b, b^2, b^4, ...}."""
    if isinstance(s, BetaSet):
        arr = s.elements
    else:
        arr = np.unique(np.fromiter((int(b) for b in s), dtype=np.uint32))
    if arr.size == 0:
        return OrbitDecomposition(orbits=[], total=0)
    sq = ctx.square_vec(arr)
    pos = np.searchsorted(arr, sq)
    pos_clipped = np.minimum(pos, arr.size - 1)
    if not bool(np.all(arr[pos_clipped] == sq)):
        missing = int(sq[arr[pos_clipped] != sq][0])
        raise NotFrobeniusClosed(f"square 0x{missing:X} escapes the set")
    reps = arr.copy()
    cur = arr
    for _ in range(ctx.m - 1):
        cur = ctx.square_vec(cur)
        reps = np.minimum(reps, cur)
    uniq, counts = np.unique(reps, return_counts=True)
    orbits = [(int(r), int(c)) for r, c in zip(uniq, counts)]
    return OrbitDecomposition(orbits=orbits, total=int(arr.size))


def transform_beta(k: int, alpha: int, beta: int, ctx: FieldCtx) -> int:
    """Normalize alpha to 1: beta' = beta / alpha^(2^(m-k)+1).

    The trinomial for (alpha, beta) is rootless iff the one for (1, beta')
    is (substitute X -> alpha^(2^-k) X and factor out alpha^(2^-k+1)).
    """
    if alpha == 0:
        raise ZeroAlpha("alpha-normalization needs alpha != 0")
    e = (1 << ((ctx.m - k) % ctx.m)) + 1
    return ctx.mul(beta, ctx.inverse(ctx.pow(alpha, e)))


def orbit_min(beta: int, ctx: FieldCtx) -> int:
    """Smallest member of the Frobenius orbit of beta."""
    best = beta
    cur = ctx.mul(beta, beta)
    while cur != beta:
        best = min(best, cur)
        cur = ctx.mul(cur, cur)
    return best


def orbit_length(beta: int, ctx: FieldCtx) -> int:
    """min { u >= 1 : beta^(2^u) = beta }; divides m."""
    u = 1
    cur = ctx.mul(beta, beta)
    while cur != beta:
        cur = ctx.mul(cur, cur)
        u += 1
    return u


def subfield_embedding(sub: FieldCtx, sup: FieldCtx) -> np.ndarray:
    """Field embedding GF(2^r) -> GF(2^m) as a lookup table of size 2^r.

    The two contexts may use unrelated moduli.  The embedding sends a
    generator g of GF(2^r)* to a root h in GF(2^m) of g's minimal
    polynomial over GF(2); g^e -> h^e is then the field homomorphism
    determined by g -> h.  (Pinning h to a conjugate root matters: an
    arbitrary element of matching multiplicative order would give a group
    embedding that need not preserve addition.)
    """
    r, m = sub.m, sup.m
    if m % r != 0:
        raise InvalidParams(f"GF(2^{r}) does not embed in GF(2^{m})")
    if sub == sup:
        return np.arange(sub.order, dtype=np.uint32)

    g = sub.generator
    # minimal polynomial of g: prod over conjugates of (X + g^(2^j))
    coeffs = [1]
    conj = g
    for _ in range(r):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= sub.mul(conj, c)
        coeffs = nxt
        conj = sub.mul(conj, conj)
        if conj == g:
            break
    if any(c not in (0, 1) for c in coeffs):
        raise InvalidParams("minimal polynomial not over GF(2)")  # unreachable

    x = sup.elements()
    acc = np.full(sup.order, coeffs[-1], dtype=np.uint32)
    for c in reversed(coeffs[:-1]):
        acc = sup.mul_vec(acc, x) ^ np.uint32(c)
    roots = np.nonzero(acc == 0)[0]
    h = int(roots[0])

    emb = np.zeros(sub.order, dtype=np.uint32)
    cur_sub, cur_sup = 1, 1
    for _ in range(sub.order - 1):
        emb[cur_sub] = cur_sup
        cur_sub = sub.mul(cur_sub, g)
        cur_sup = sup.mul(cur_sup, h)

    # self-check GF(2)-linearity: table must equal its own linear extension
    lin = np.zeros(1, dtype=np.uint32)
    for j in range(r):
        lin = np.concatenate([lin, lin ^ emb[1 << j]])
    if not bool(np.array_equal(lin, emb)):
        raise InvalidParams("embedding failed additivity check")  # unreachable
    return emb
