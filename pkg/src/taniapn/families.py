"""Bivariate APN function families on GF(2^m) x GF(2^m).

Functions on GF(2^(2m)) are kept in bivariate form throughout: a pair of
coordinate maps GF(2^m)^2 -> GF(2^m), never a univariate map over one
GF(2^(2m)) tower.  Points pack into a single index as

    v = (bits(x) << m) | bits(y)

and truth tables are arrays indexed by v holding packed values the same
way.  The families:

    taniguchi  f(x,y) = (x^(2^(2k)(2^k+1)) + a*x^(2^(2k))*y^(2^k) + b*y^(2^k+1), x*y)
               APN  iff  X^(2^k+1) + a*X + b has no root in GF(2^m)
    pott-zhou  g(x,y) = (x^(2^k+1) + a*y^(2^s(2^k+1)), x*y),  m even
               APN  iff  s even and a a non-cube

plus the univariate Gold power map x -> x^(2^i+1), gcd(i, n) = 1, kept as
a known-APN fixture for the differential checker.

Truth-table file format (import/export):
    header  = magic "APNT" | u8 version (=1) | u16 m (LE) | u8 kind
    payload = 2^(2m) little-endian (u32 first-coordinate, u32 second-coordinate)
              pairs in packed-index order
    kind    = 0 truth-table, 1 taniguchi, 2 pott-zhou
A JSON manifest (same path + ".json") records m, kind, modulus and the
generating parameters.
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from pathlib import Path

import numpy as np

from .errors import InvalidParams, TooLarge
from .gf2m import FieldCtx, default_ctx
from .poly_roots import count_roots

_MATERIALIZE_LIMIT = 28  # bits of packed index (= 2m)
_FILE_MAGIC = b"APNT"
_FILE_VERSION = 1
_KIND_CODES = {"truth-table": 0, "taniguchi": 1, "pott-zhou": 2}
_KIND_NAMES = {v: k for k, v in _KIND_CODES.items()}


# ---------------------------------------------------------------------------
# Parameter triples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TaniguchiParams:
    """(m, k, alpha, beta) with 0 < k < m, gcd(k, m) = 1, beta != 0."""

    m: int
    k: int
    alpha: int
    beta: int

    def __post_init__(self):
        if self.m < 2:
            raise InvalidParams("taniguchi family needs m >= 2")
        if not 0 < self.k < self.m:
            raise InvalidParams(f"k={self.k} out of range (0, {self.m})")
        if gcd(self.k, self.m) != 1:
            raise InvalidParams(f"k={self.k} not coprime to m={self.m}")
        if not 0 <= self.alpha < (1 << self.m):
            raise InvalidParams("alpha out of field range")
        if not 0 < self.beta < (1 << self.m):
            raise InvalidParams("beta must be a nonzero field element")


@dataclass(frozen=True)
class PottZhouParams:
    """(m, k, s, alpha) with m even, 0 < k < m coprime, 0 <= s <= m, alpha != 0.

    The structural constraints above make the function well defined; the
    APN criterion (s even and alpha a non-cube) is checked separately so
    the non-APN members stay constructible for negative tests.
    """

    m: int
    k: int
    s: int
    alpha: int

    def __post_init__(self):
        if self.m < 2 or self.m % 2:
            raise InvalidParams("pott-zhou family needs even m >= 2")
        if not 0 < self.k < self.m:
            raise InvalidParams(f"k={self.k} out of range (0, {self.m})")
        if gcd(self.k, self.m) != 1:
            raise InvalidParams(f"k={self.k} not coprime to m={self.m}")
        if not 0 <= self.s <= self.m:
            raise InvalidParams(f"s={self.s} out of range [0, {self.m}]")
        if not 0 < self.alpha < (1 << self.m):
            raise InvalidParams("alpha must be a nonzero field element")


# ---------------------------------------------------------------------------
# Evaluatable functions
# ---------------------------------------------------------------------------

class BivariateFunction:
    """A map GF(2^m)^2 -> GF(2^m)^2, family-parametric or a truth table."""

    kind: str = "abstract"

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx

    @property
    def dimension(self) -> int:
        """Ambient dimension n = 2m of the packed index space."""
        return 2 * self.ctx.m

    def evaluate(self, x: int, y: int) -> tuple[int, int]:
        raise NotImplementedError

    def eval_packed_vec(self, v: np.ndarray) -> np.ndarray:
        """Packed values at packed points; subclasses vectorize this."""
        m = self.ctx.m
        mask = (1 << m) - 1
        out = np.empty(v.shape, dtype=np.uint32)
        for i, p in enumerate(v):
            f1, f2 = self.evaluate(int(p) >> m, int(p) & mask)
            out[i] = (f1 << m) | f2
        return out

    @cached_property
    def _table(self) -> np.ndarray:
        n = self.dimension
        if n > _MATERIALIZE_LIMIT:
            raise TooLarge(f"truth table of 2^{n} entries exceeds the 2^{_MATERIALIZE_LIMIT} guard")
        out = np.empty(1 << n, dtype=np.uint32)
        chunk = 1 << min(n, 22)
        for lo in range(0, 1 << n, chunk):
            v = np.arange(lo, lo + chunk, dtype=np.uint32)
            out[lo:lo + chunk] = self.eval_packed_vec(v)
        return out

    def packed_table(self) -> np.ndarray:
        """Full truth table as packed uint32 values, cached."""
        return self._table


class TaniguchiFunction(BivariateFunction):
    kind = "taniguchi"

    def __init__(self, params: TaniguchiParams, ctx: FieldCtx):
        super().__init__(ctx)
        if ctx.m != params.m:
            raise InvalidParams("context degree does not match params")
        self.params = params

    def evaluate(self, x: int, y: int) -> tuple[int, int]:
        ctx, p = self.ctx, self.params
        x2k2 = ctx.pow2k(x, 2 * p.k)
        yk = ctx.pow2k(y, p.k)
        f1 = ctx.mul(ctx.pow2k(x, 3 * p.k), x2k2)          # x^(2^(2k)(2^k+1))
        f1 ^= ctx.mul(p.alpha, ctx.mul(x2k2, yk))
        f1 ^= ctx.mul(p.beta, ctx.mul(yk, y))
        return f1, ctx.mul(x, y)

    def eval_packed_vec(self, v: np.ndarray) -> np.ndarray:
        ctx, p = self.ctx, self.params
        m = ctx.m
        x = (v >> m).astype(np.uint32)
        y = (v & np.uint32((1 << m) - 1)).astype(np.uint32)
        x2k2 = ctx.pow2k_vec(x, 2 * p.k)
        yk = ctx.pow2k_vec(y, p.k)
        f1 = ctx.mul_vec(ctx.pow2k_vec(x, 3 * p.k), x2k2)
        f1 ^= ctx.mul_vec(ctx.mul_vec(x2k2, yk), p.alpha)
        f1 ^= ctx.mul_vec(ctx.mul_vec(yk, y), p.beta)
        f2 = ctx.mul_vec(x, y)
        return (f1.astype(np.uint32) << np.uint32(m)) | f2

    def is_apn_criterion(self) -> bool:
        """APN criterion: the trinomial X^(2^k+1)+alpha*X+beta is rootless.

        For alpha = 0 this is equivalent to (m even and beta a non-cube).
        """
        p = self.params
        return count_roots(p.k, p.alpha, p.beta, self.ctx) == 0

    def is_apn(self) -> bool:
        """Alias for the closed-form criterion (the exhaustive verdict lives
        in diffanalysis.is_apn)."""
        return self.is_apn_criterion()


class PottZhouFunction(BivariateFunction):
    kind = "pott-zhou"

    def __init__(self, params: PottZhouParams, ctx: FieldCtx):
        super().__init__(ctx)
        if ctx.m != params.m:
            raise InvalidParams("context degree does not match params")
        self.params = params

    def evaluate(self, x: int, y: int) -> tuple[int, int]:
        ctx, p = self.ctx, self.params
        f1 = ctx.mul(ctx.pow2k(x, p.k), x)                         # x^(2^k+1)
        yterm = ctx.pow2k(ctx.mul(ctx.pow2k(y, p.k), y), p.s)      # y^(2^s(2^k+1))
        f1 ^= ctx.mul(p.alpha, yterm)
        return f1, ctx.mul(x, y)

    def eval_packed_vec(self, v: np.ndarray) -> np.ndarray:
        ctx, p = self.ctx, self.params
        m = ctx.m
        x = (v >> m).astype(np.uint32)
        y = (v & np.uint32((1 << m) - 1)).astype(np.uint32)
        f1 = ctx.mul_vec(ctx.pow2k_vec(x, p.k), x)
        yterm = ctx.pow2k_vec(ctx.mul_vec(ctx.pow2k_vec(y, p.k), y), p.s)
        f1 ^= ctx.mul_vec(yterm, p.alpha)
        f2 = ctx.mul_vec(x, y)
        return (f1.astype(np.uint32) << np.uint32(m)) | f2

    def is_apn_criterion(self) -> bool:
        """APN criterion: s even and alpha a non-cube."""
        p = self.params
        return p.s % 2 == 0 and not self.ctx.is_cube(p.alpha)

    def is_apn(self) -> bool:
        """Alias for the closed-form criterion (the exhaustive verdict lives
        in diffanalysis.is_apn)."""
        return self.is_apn_criterion()


class TruthTableFunction(BivariateFunction):
    kind = "truth-table"

    def __init__(self, table: np.ndarray, ctx: FieldCtx, source_kind: str | None = None):
        super().__init__(ctx)
        n = 2 * ctx.m
        if table.shape != (1 << n,):
            raise InvalidParams(f"truth table must have 2^{n} entries")
        if table.size and int(table.max()) >= 1 << n:
            raise InvalidParams(f"truth table entry exceeds the 2^{n} point space")
        self.table = np.ascontiguousarray(table, dtype=np.uint32)
        self.source_kind = source_kind

    def evaluate(self, x: int, y: int) -> tuple[int, int]:
        m = self.ctx.m
        v = int(self.table[(x << m) | y])
        return v >> m, v & ((1 << m) - 1)

    def eval_packed_vec(self, v: np.ndarray) -> np.ndarray:
        return self.table[v]

    def packed_table(self) -> np.ndarray:
        return self.table


class GoldFunction:
    """Univariate Gold power map x -> x^(2^i+1) on GF(2^n); known APN fixture."""

    kind = "gold"

    def __init__(self, ctx: FieldCtx, i: int):
        if gcd(i, ctx.m) != 1:
            raise InvalidParams(f"gold exponent i={i} not coprime to n={ctx.m}")
        self.ctx = ctx
        self.i = i

    @property
    def dimension(self) -> int:
        return self.ctx.m

    def evaluate(self, x: int) -> int:
        return self.ctx.mul(self.ctx.pow2k(x, self.i), x)

    @cached_property
    def _table(self) -> np.ndarray:
        x = self.ctx.elements()
        return self.ctx.mul_vec(self.ctx.pow2k_vec(x, self.i), x)

    def packed_table(self) -> np.ndarray:
        return self._table


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def taniguchi(params: TaniguchiParams, ctx: FieldCtx | None = None) -> TaniguchiFunction:
    return TaniguchiFunction(params, ctx or default_ctx(params.m))


def pott_zhou(params: PottZhouParams, ctx: FieldCtx | None = None) -> PottZhouFunction:
    return PottZhouFunction(params, ctx or default_ctx(params.m))


def gold(n: int, i: int, ctx_n: FieldCtx | None = None) -> GoldFunction:
    return GoldFunction(ctx_n or default_ctx(n), i)


def materialize(f: BivariateFunction) -> TruthTableFunction:
    """Freeze f into an explicit truth table (guarded at 2m <= 28)."""
    if isinstance(f, TruthTableFunction):
        return f
    return TruthTableFunction(f.packed_table(), f.ctx, source_kind=f.kind)


# ---------------------------------------------------------------------------
# Truth-table file format
# ---------------------------------------------------------------------------

def save_function(f: BivariateFunction, path: str | Path) -> Path:
    """Write the binary table plus a JSON manifest (path + ".json")."""
    path = Path(path)
    m = f.ctx.m
    table = f.packed_table()
    kind_code = _KIND_CODES[f.kind if f.kind in _KIND_CODES else "truth-table"]
    with open(path, "wb") as fh:
        fh.write(_FILE_MAGIC)
        fh.write(struct.pack("<BHB", _FILE_VERSION, m, kind_code))
        pairs = np.empty((table.size, 2), dtype="<u4")
        pairs[:, 0] = table >> np.uint32(m)
        pairs[:, 1] = table & np.uint32((1 << m) - 1)
        pairs.tofile(fh)
    manifest = {
        "format": _FILE_MAGIC.decode(),
        "version": _FILE_VERSION,
        "m": m,
        "kind": f.kind,
        "modulus": f"0x{f.ctx.modulus:X}",
    }
    params = getattr(f, "params", None)
    if params is not None:
        manifest["params"] = {
            field: (value if field in ("m", "k", "s") else f"0x{value:X}")
            for field, value in vars(params).items()
        }
    manifest_path = path.with_name(path.name + ".json")
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return manifest_path


def load_function(path: str | Path, ctx: FieldCtx | None = None) -> TruthTableFunction:
    """Read a table written by save_function; modulus comes from the manifest."""
    path = Path(path)
    raw = path.read_bytes()
    if raw[:4] != _FILE_MAGIC:
        raise InvalidParams(f"{path}: bad magic, not a truth-table file")
    version, m, kind_code = struct.unpack("<BHB", raw[4:8])
    if version != _FILE_VERSION:
        raise InvalidParams(f"{path}: unsupported version {version}")
    if kind_code not in _KIND_NAMES:
        raise InvalidParams(f"{path}: unknown kind code {kind_code}")
    if ctx is None:
        manifest_path = path.with_name(path.name + ".json")
        if manifest_path.exists():
            manifest = json.loads(manifest_path.read_text())
            ctx = FieldCtx(m, int(manifest["modulus"], 16))
        else:
            ctx = default_ctx(m)
    if ctx.m != m:
        raise InvalidParams(f"{path}: header degree {m} != context degree {ctx.m}")
    pairs = np.frombuffer(raw[8:], dtype="<u4").reshape(-1, 2)
    if pairs.shape[0] != 1 << (2 * m):
        raise InvalidParams(f"{path}: expected 2^{2 * m} entries, got {pairs.shape[0]}")
    if int(pairs.max(initial=0)) >= 1 << m:
        raise InvalidParams(f"{path}: coordinate value out of GF(2^{m})")
    table = (pairs[:, 0].astype(np.uint32) << np.uint32(m)) | pairs[:, 1].astype(np.uint32)
    return TruthTableFunction(table, ctx, source_kind=_KIND_NAMES[kind_code])
