"""Equivalence classification of the bivariate family f_{k,alpha,beta}.

Canonical form.  Every APN member with alpha != 0 is linearly equivalent
to one with alpha = 1 (scale y by alpha^(-2^(-k)), sending beta to
beta' = beta / alpha^(2^(-k)+1)), with beta' movable along its Frobenius
orbit and k replaceable by m - k.  For m >= 3 two members are
CCZ-equivalent exactly when their canonical triples

    ( k* = min(k, m-k),  alpha* in {0, 1},  beta* = orbit minimum )

coincide; all alpha = 0 members with the same k* form a single class,
marked (k*, 0, 0).

Witnesses.  Equivalences are produced constructively as (L, N, M) with
f(L(x, y)) = N(g(x, y)) + M(x, y), composed from the elementary maps
(alpha-normalization, Frobenius twist, k-negation, and the alpha = 0
bridge to the pott-zhou family) and only ever trusted after
verify_witness checks both coordinate identities on the full grid and
the bijectivity of L and N.

Automorphism orders.  For m >= 4,

    |Aut_EL| = 3m(2^m-1)            alpha = 0, m = 4
             = (3/2)m(2^m-1)        alpha = 0, m >= 5
             = m(2^m-1)/d           alpha != 0, d = orbit length of beta'

and |Aut| = |Aut_EA| = 2^(2m) |Aut_EL| (the translation part contributes
a factor 2^(2m)).  m = 2 and m = 3 have the single classes with
|Aut| = 5760 and 896 respectively (known orders).  The monomial
enumerator rebuilds |Aut_EL| from scratch for alpha = 1 by trying every
self-witness of the shape L_A = a X^(2^u), L_B = a^(2^(2k)) Y^(2^u).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    DegreeMismatch,
    InvalidParams,
    NotApn,
    TooLarge,
)
from .families import (
    BivariateFunction,
    PottZhouParams,
    TaniguchiParams,
    pott_zhou,
    taniguchi,
)
from .gf2m import FieldCtx, default_ctx
from .linmaps import PairMap, gf2_rank, mono_lin, table_from_images, zero_lin
from .poly_roots import count_roots, orbit_length, orbit_min, transform_beta

_VERIFY_BITS_LIMIT = 20   # exhaustive witness check is 2^(2m) points
_MONOMIAL_DEGREE_LIMIT = 8


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalTriple:
    """Equality of triples decides CCZ-equivalence (m >= 3)."""

    k_star: int
    alpha_star: int   # 0 or 1
    beta_star: int    # orbit minimum of beta'; marker 0 when alpha_star = 0

    def to_json(self) -> dict:
        return {
            "k_star": self.k_star,
            "alpha_star": self.alpha_star,
            "beta_star": f"0x{self.beta_star:X}",
        }

    @classmethod
    def from_json(cls, data: dict) -> "CanonicalTriple":
        return cls(int(data["k_star"]), int(data["alpha_star"]),
                   int(data["beta_star"], 16))


@dataclass(frozen=True)
class LinearWitness:
    """(L, N, M) with f(L(x,y)) = N(g(x,y)) + M(x,y).

    Blocks: L = (L_A; L_B), N = (N1, N3; N2, N4), M = (M_A; M_B), each a
    PairMap whose xx/xy rows feed the first coordinate.
    """

    l_map: PairMap
    n_map: PairMap
    m_map: PairMap

    # named blocks of N
    @property
    def n1(self): return self.n_map.xx
    @property
    def n3(self): return self.n_map.xy
    @property
    def n2(self): return self.n_map.yx
    @property
    def n4(self): return self.n_map.yy

    def to_json(self) -> dict:
        return {
            "l_a": {"x": _hex_vec(self.l_map.xx), "y": _hex_vec(self.l_map.xy)},
            "l_b": {"x": _hex_vec(self.l_map.yx), "y": _hex_vec(self.l_map.yy)},
            "n1": _hex_vec(self.n1),
            "n2": _hex_vec(self.n2),
            "n3": _hex_vec(self.n3),
            "n4": _hex_vec(self.n4),
            "m_a": {"x": _hex_vec(self.m_map.xx), "y": _hex_vec(self.m_map.xy)},
            "m_b": {"x": _hex_vec(self.m_map.yx), "y": _hex_vec(self.m_map.yy)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "LinearWitness":
        return cls(
            l_map=PairMap(
                xx=_vec_hex(data["l_a"]["x"]), xy=_vec_hex(data["l_a"]["y"]),
                yx=_vec_hex(data["l_b"]["x"]), yy=_vec_hex(data["l_b"]["y"]),
            ),
            n_map=PairMap(
                xx=_vec_hex(data["n1"]), xy=_vec_hex(data["n3"]),
                yx=_vec_hex(data["n2"]), yy=_vec_hex(data["n4"]),
            ),
            m_map=PairMap(
                xx=_vec_hex(data["m_a"]["x"]), xy=_vec_hex(data["m_a"]["y"]),
                yx=_vec_hex(data["m_b"]["x"]), yy=_vec_hex(data["m_b"]["y"]),
            ),
        )


def _hex_vec(p) -> list[str]:
    return [f"0x{c:X}" for c in p]


def _vec_hex(v) -> tuple[int, ...]:
    return tuple(int(c, 16) for c in v)


@dataclass(frozen=True)
class AutWitness:
    """Monomial EL-automorphism: L_A = a_u X^(2^u), L_B = b_bar_u Y^(2^u),
    N1 = c_u X^(2^u), with b_bar_u = a_u^(2^(2k)) and c_u = b_bar_u^(2^k+1)."""

    u: int
    a_u: int
    b_bar_u: int
    c_u: int


class AutOrders(NamedTuple):
    aut_el: int
    aut_ea: int
    aut: int


# ---------------------------------------------------------------------------
# Canonicalization and the equivalence decision
# ---------------------------------------------------------------------------

def _resolve_ctx(p: TaniguchiParams, ctx: FieldCtx | None) -> FieldCtx:
    ctx = ctx or default_ctx(p.m)
    if ctx.m != p.m:
        raise InvalidParams("context degree does not match params")
    return ctx


def _require_apn(p: TaniguchiParams, ctx: FieldCtx) -> None:
    if count_roots(p.k, p.alpha, p.beta, ctx) != 0:
        raise NotApn(f"f_(k={p.k}, alpha=0x{p.alpha:X}, beta=0x{p.beta:X}) is not APN")


def canonicalize(p: TaniguchiParams, ctx: FieldCtx | None = None) -> CanonicalTriple:
    """Canonical triple of an APN member; defined for m >= 3."""
    ctx = _resolve_ctx(p, ctx)
    if p.m < 3:
        raise InvalidParams("canonical form is defined for m >= 3")
    _require_apn(p, ctx)
    k_star = min(p.k, p.m - p.k)
    if p.alpha == 0:
        return CanonicalTriple(k_star, 0, 0)
    beta1 = transform_beta(p.k, p.alpha, p.beta, ctx)
    return CanonicalTriple(k_star, 1, orbit_min(beta1, ctx))


def are_ccz_equivalent(p1: TaniguchiParams, p2: TaniguchiParams,
                       ctx: FieldCtx | None = None) -> bool:
    if p1.m != p2.m:
        raise DegreeMismatch(f"m={p1.m} vs m={p2.m}")
    return canonicalize(p1, ctx) == canonicalize(p2, ctx)


# ---------------------------------------------------------------------------
# Elementary witnesses (each verified by tests, never assumed)
# ---------------------------------------------------------------------------

def identity_witness(m: int) -> LinearWitness:
    return LinearWitness(PairMap.identity(m), PairMap.identity(m), PairMap.zero(m))


def _w_alpha(k: int, alpha: int, ctx: FieldCtx) -> LinearWitness:
    """f_{k,alpha,beta} <- f_{k,1,beta/alpha^(2^(-k)+1)}: scale y by 1/alpha^(2^-k)."""
    m = ctx.m
    c = ctx.inverse(ctx.pow2k(alpha, m - k))
    return LinearWitness(
        l_map=PairMap(mono_lin(m, 1, 0), zero_lin(m), zero_lin(m), mono_lin(m, c, 0)),
        n_map=PairMap(mono_lin(m, 1, 0), zero_lin(m), zero_lin(m), mono_lin(m, c, 0)),
        m_map=PairMap.zero(m),
    )


def _w_frob(i: int, ctx: FieldCtx) -> LinearWitness:
    """f_{k,alpha,beta^(2^i)} <- f_{k,alpha,beta}: raise everything to 2^i."""
    m = ctx.m
    return LinearWitness(
        l_map=PairMap(mono_lin(m, 1, i), zero_lin(m), zero_lin(m), mono_lin(m, 1, i)),
        n_map=PairMap(mono_lin(m, 1, i), zero_lin(m), zero_lin(m), mono_lin(m, 1, i)),
        m_map=PairMap.zero(m),
    )


def _w_negk(k_star: int, beta: int, ctx: FieldCtx) -> LinearWitness:
    """f_{m-k*,1,beta} <- f_{k*,1/beta,1/beta}: swap x and y, twist by 2^(3k*)."""
    m = ctx.m
    d = (3 * k_star) % m
    return LinearWitness(
        l_map=PairMap(zero_lin(m), mono_lin(m, 1, d), mono_lin(m, 1, d), zero_lin(m)),
        n_map=PairMap(mono_lin(m, beta, 0), zero_lin(m), zero_lin(m), mono_lin(m, 1, d)),
        m_map=PairMap.zero(m),
    )


def _w_pz_bridge(beta: int, ctx: FieldCtx) -> LinearWitness:
    """f_{k,0,beta} <- g_{k,2k,1/beta}: swap x and y, scale first output by beta."""
    m = ctx.m
    return LinearWitness(
        l_map=PairMap(zero_lin(m), mono_lin(m, 1, 0), mono_lin(m, 1, 0), zero_lin(m)),
        n_map=PairMap(mono_lin(m, beta, 0), zero_lin(m), zero_lin(m), mono_lin(m, 1, 0)),
        m_map=PairMap.zero(m),
    )


def compose_witness(w1: LinearWitness, w2: LinearWitness, ctx: FieldCtx) -> LinearWitness:
    """(f <- g) composed with (g <- h) gives f <- h."""
    return LinearWitness(
        l_map=w1.l_map.compose(w2.l_map, ctx),
        n_map=w1.n_map.compose(w2.n_map, ctx),
        m_map=w1.n_map.compose(w2.m_map, ctx).add(w1.m_map.compose(w2.l_map, ctx)),
    )


def invert_witness(w: LinearWitness, ctx: FieldCtx) -> LinearWitness:
    """(f <- g) inverted to (g <- f): g(L^-1) = N^-1(f) + N^-1(M(L^-1))."""
    l_inv = w.l_map.inverse(ctx)
    n_inv = w.n_map.inverse(ctx)
    m_new = n_inv.compose(w.m_map.compose(l_inv, ctx), ctx)
    return LinearWitness(l_map=l_inv, n_map=n_inv, m_map=m_new)


# ---------------------------------------------------------------------------
# Constructive canonicalization
# ---------------------------------------------------------------------------

def canonical_witness(p: TaniguchiParams, ctx: FieldCtx | None = None
                      ) -> tuple[LinearWitness, TaniguchiParams]:
    """Composed witness f_p <- f_canonical for alpha != 0 members.

    Chains the elementary reductions: alpha -> 1, then k -> m-k when
    k > m/2 (via the 3k-Frobenius swap, which reintroduces an alpha to
    normalize), then a Frobenius twist down to the orbit minimum.
    """
    ctx = _resolve_ctx(p, ctx)
    if p.alpha == 0:
        raise InvalidParams("constructive canonicalization needs alpha != 0")
    if p.m < 3:
        raise InvalidParams("canonical form is defined for m >= 3")
    _require_apn(p, ctx)

    m = ctx.m
    w = identity_witness(m)
    k, beta = p.k, p.beta

    if p.alpha != 1:
        w = compose_witness(w, _w_alpha(k, p.alpha, ctx), ctx)
        beta = transform_beta(k, p.alpha, beta, ctx)

    if k > m // 2:
        k_star = m - k
        w = compose_witness(w, _w_negk(k_star, beta, ctx), ctx)
        inv_b = ctx.inverse(beta)
        # now at f_{k*, 1/beta, 1/beta}; normalize its alpha away
        w = compose_witness(w, _w_alpha(k_star, inv_b, ctx), ctx)
        beta = transform_beta(k_star, inv_b, inv_b, ctx)
        k = k_star

    beta_star = orbit_min(beta, ctx)
    i = 0
    cur = beta_star
    while cur != beta:
        cur = ctx.mul(cur, cur)
        i += 1
    if i:
        w = compose_witness(w, _w_frob(i, ctx), ctx)

    target = TaniguchiParams(m=m, k=k, alpha=1, beta=beta_star)
    return w, target


def equivalence_witness(p1: TaniguchiParams, p2: TaniguchiParams,
                        ctx: FieldCtx | None = None) -> LinearWitness | None:
    """Witness with f_{p1}(L(x,y)) = N(f_{p2}(x,y)) + M(x,y), or None.

    None means no constructive path: the members are inequivalent, or
    both have alpha = 0 with betas in different Frobenius orbits (their
    equivalence routes through pott-zhou maps not restated here).
    """
    if p1.m != p2.m:
        raise DegreeMismatch(f"m={p1.m} vs m={p2.m}")
    ctx = ctx or default_ctx(p1.m)
    if not are_ccz_equivalent(p1, p2, ctx):
        return None
    if p1 == p2:
        return identity_witness(ctx.m)
    if (p1.alpha == 0) != (p2.alpha == 0):
        return None
    if p1.alpha == 0:
        if p1.k != p2.k:
            return None
        i, cur = 0, p2.beta
        while cur != p1.beta:
            cur = ctx.mul(cur, cur)
            i += 1
            if i >= ctx.m:
                return None  # same class but different orbit: no direct map here
        return _w_frob(i, ctx) if i else identity_witness(ctx.m)
    w1, c1 = canonical_witness(p1, ctx)
    w2, c2 = canonical_witness(p2, ctx)
    assert c1 == c2
    return compose_witness(w1, invert_witness(w2, ctx), ctx)


def pott_zhou_bridge_witness(p: TaniguchiParams, ctx: FieldCtx | None = None
                             ) -> tuple[LinearWitness, PottZhouParams]:
    """Witness f_{k,0,beta} <- g_{k,2k,1/beta} (even m, non-cube beta, k < m/2)."""
    ctx = _resolve_ctx(p, ctx)
    if p.alpha != 0:
        raise InvalidParams("bridge witness is for alpha = 0 members")
    if not 0 < p.k < p.m / 2:
        raise InvalidParams("bridge witness needs 0 < k < m/2")
    _require_apn(p, ctx)
    pz = PottZhouParams(m=p.m, k=p.k, s=2 * p.k, alpha=ctx.inverse(p.beta))
    return _w_pz_bridge(p.beta, ctx), pz


# ---------------------------------------------------------------------------
# Witness verification
# ---------------------------------------------------------------------------

def verify_witness(w: LinearWitness, f: BivariateFunction, g: BivariateFunction) -> bool:
    """Exhaustively check f(L(x,y)) = N(g(x,y)) + M(x,y) plus bijectivity."""
    if f.ctx != g.ctx:
        raise DegreeMismatch("witness operands live over different contexts")
    ctx = f.ctx
    n = 2 * ctx.m
    if n > _VERIFY_BITS_LIMIT:
        raise TooLarge(f"witness verification capped at 2m={_VERIFY_BITS_LIMIT}")
    l_imgs = w.l_map.images(ctx)
    n_imgs = w.n_map.images(ctx)
    if gf2_rank(l_imgs) != n or gf2_rank(n_imgs) != n:
        return False
    f_tab = f.packed_table()
    g_tab = g.packed_table()
    l_tab = table_from_images(l_imgs)
    n_tab = table_from_images(n_imgs)
    m_tab = w.m_map.table(ctx)
    return bool(np.array_equal(f_tab[l_tab], n_tab[g_tab] ^ m_tab))


# ---------------------------------------------------------------------------
# Automorphism groups
# ---------------------------------------------------------------------------

_KNOWN_AUT_ORDERS = {2: 5760, 3: 896}  # |Aut| of the single class at m = 2, 3


def aut_orders(p: TaniguchiParams, ctx: FieldCtx | None = None) -> AutOrders:
    """(|Aut_EL|, |Aut_EA|, |Aut|) of an APN member.

    m in {2, 3} returns the known single-class orders (5760, 896 for |Aut|),
    with |Aut_EL| = |Aut| / 2^(2m) from the translation factorization.
    """
    ctx = _resolve_ctx(p, ctx)
    _require_apn(p, ctx)
    m = p.m
    if m in _KNOWN_AUT_ORDERS:
        aut = _KNOWN_AUT_ORDERS[m]
        return AutOrders(aut >> (2 * m), aut, aut)
    if p.alpha == 0:
        if m == 4:
            el = 3 * m * (ctx.order - 1)
        else:
            el = 3 * m * (ctx.order - 1) // 2
    else:
        beta1 = transform_beta(p.k, p.alpha, p.beta, ctx)
        el = m * (ctx.order - 1) // orbit_length(beta1, ctx)
    aut = el << (2 * m)
    return AutOrders(el, aut, aut)


def pott_zhou_aut_order(m: int, s: int) -> int:
    """|Aut(g_{k,s,alpha})|: comparison constant for the inequivalence check."""
    base = 3 * m * ((1 << m) - 1)
    if s % m in (0, m // 2):
        return base << (2 * m)
    return base << (2 * m - 1)


def monomial_el_automorphisms(p: TaniguchiParams, ctx: FieldCtx | None = None
                              ) -> list[AutWitness]:
    """Every verified self-witness of the monomial shape, by exhaustion.

    Enumerates (u, a_u), derives b_bar_u = a_u^(2^(2k)), c_u = b_bar_u^(2^k+1),
    N4 = a_u b_bar_u X^(2^u), and keeps the tuples whose witness
    verify_witness accepts against f itself.
    """
    ctx = _resolve_ctx(p, ctx)
    if p.alpha != 1:
        raise InvalidParams("monomial enumeration is stated for alpha = 1")
    if p.m > _MONOMIAL_DEGREE_LIMIT:
        raise TooLarge(f"monomial enumeration capped at m={_MONOMIAL_DEGREE_LIMIT}")
    _require_apn(p, ctx)
    f = taniguchi(p, ctx)
    f.packed_table()  # build once; every verification reuses it
    m = ctx.m
    found = []
    for u in range(m):
        for a_u in range(1, ctx.order):
            b_bar = ctx.pow2k(a_u, 2 * p.k)
            c_u = ctx.pow(b_bar, (1 << p.k) + 1)
            w = LinearWitness(
                l_map=PairMap(mono_lin(m, a_u, u), zero_lin(m),
                              zero_lin(m), mono_lin(m, b_bar, u)),
                n_map=PairMap(mono_lin(m, c_u, u), zero_lin(m),
                              zero_lin(m), mono_lin(m, ctx.mul(a_u, b_bar), u)),
                m_map=PairMap.zero(m),
            )
            if verify_witness(w, f, f):
                found.append(AutWitness(u=u, a_u=a_u, b_bar_u=b_bar, c_u=c_u))
    return found


def count_monomial_el_automorphisms(p: TaniguchiParams,
                                    ctx: FieldCtx | None = None) -> int:
    """|Aut_EL| recomputed by the monomial exhaustion (alpha = 1, m <= 8)."""
    return len(monomial_el_automorphisms(p, ctx))
