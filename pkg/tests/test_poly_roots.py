"""Trinomial root analysis: scan oracle, Phi enumeration, orbits, embeddings."""

import numpy as np
import pytest

from taniapn.counting import capital_m
from taniapn.errors import InvalidK, NotFrobeniusClosed, ZeroAlpha
from taniapn.gf2m import coprime_residues, default_ctx
from taniapn.poly_roots import (
    BetaSet,
    count_roots,
    frobenius_orbits,
    orbit_length,
    orbit_min,
    phi_set,
    subfield_embedding,
    transform_beta,
)

GF8 = default_ctx(3)
GF16 = default_ctx(4)


def phi_by_definition(k, ctx):
    """Independent oracle: Phi via a per-beta root count, not image complement."""
    return {b for b in range(ctx.order) if count_roots(k, 1, b, ctx) == 0}


def test_count_roots_beta_zero_always_rooted():
    for m in (2, 3, 4, 5):
        ctx = default_ctx(m)
        for k in coprime_residues(m):
            assert count_roots(k, 1, 0, ctx) >= 1


def test_count_roots_gf8():
    # exactly 3 values of beta give a rootless trinomial at m=3, k=1
    zero_root_betas = [b for b in range(8) if count_roots(1, 1, b, GF8) == 0]
    assert len(zero_root_betas) == 3
    assert zero_root_betas == [2, 4, 6]


def test_count_roots_invalid_k():
    with pytest.raises(InvalidK):
        count_roots(2, 1, 1, default_ctx(4))
    with pytest.raises(InvalidK):
        count_roots(3, 1, 1, default_ctx(6))


@pytest.mark.parametrize("m", range(2, 11))
def test_root_count_trichotomy(m):
    # {0, 1, 3} on beta != 0; beta = 0 factors as X(X^(2^k)+1) with roots {0, 1}
    ctx = default_ctx(m)
    ks = {1, coprime_residues(m)[-1]}
    for k in ks:
        counts = [count_roots(k, 1, b, ctx) for b in range(ctx.order)]
        assert counts[0] == 2
        assert set(counts[1:]) <= {0, 1, 3}
        # independent cross-check: multiset of the image x -> x^(2^k+1)+x
        x = ctx.elements()
        img = ctx.mul_vec(ctx.pow2k_vec(x, k), x) ^ x
        bincounts = np.bincount(img, minlength=ctx.order)
        assert counts == bincounts.tolist()


@pytest.mark.parametrize("m", range(1, 15))
def test_phi_size_formula(m):
    ctx = default_ctx(m)
    for k in {1, coprime_residues(m)[-1]}:
        assert len(phi_set(k, ctx)) == capital_m(m)


def test_phi_matches_definition_oracle():
    for m in range(1, 9):
        ctx = default_ctx(m)
        for k in coprime_residues(m):
            assert set(phi_set(k, ctx)) == phi_by_definition(k, ctx)


def test_phi_basics():
    phi3 = phi_set(1, GF8)
    assert list(phi3) == [2, 4, 6]
    phi4 = phi_set(1, GF16)
    assert list(phi4) == [1, 9, 11, 13, 14]
    for m in range(1, 10):
        ctx = default_ctx(m)
        for k in coprime_residues(m):
            phi = phi_set(k, ctx)
            assert 0 not in phi
            sq = set(int(v) for v in ctx.square_vec(phi.elements))
            assert sq <= set(phi)            # Frobenius closure


def test_phi_k_negation_symmetry():
    for m in range(2, 11):
        ctx = default_ctx(m)
        for k in coprime_residues(m):
            assert set(phi_set(k, ctx)) == set(phi_set(m - k, ctx))


def test_phi_orbit_profile_independent_of_k():
    # The weaker always-checkable invariant: profiles agree across k.
    # (Set-level equality fails in general: first at m=5, k=2.)
    for m in range(1, 13):
        ctx = default_ctx(m)
        ks = coprime_residues(m)
        base = frobenius_orbits(phi_set(ks[0], ctx), ctx).lengths()
        for k in ks[1:]:
            assert frobenius_orbits(phi_set(k, ctx), ctx).lengths() == base
    assert set(phi_set(2, default_ctx(5))) != set(phi_set(1, default_ctx(5)))


def test_frobenius_orbits_examples():
    dec3 = frobenius_orbits(phi_set(1, GF8), GF8)
    assert dec3.orbits == [(2, 3)] and dec3.total == 3
    dec4 = frobenius_orbits(phi_set(1, GF16), GF16)
    assert dec4.lengths() == [1, 4] and dec4.total == 5
    assert dec4.orbits[0] == (1, 1)
    single = frobenius_orbits({1}, GF8)
    assert single.orbits == [(1, 1)]


def test_frobenius_orbits_properties():
    for m in (4, 6, 9):
        ctx = default_ctx(m)
        dec = frobenius_orbits(phi_set(1, ctx), ctx)
        assert sum(length for _, length in dec.orbits) == dec.total
        for rep, length in dec.orbits:
            assert m % length == 0
            assert orbit_min(rep, ctx) == rep
            assert orbit_length(rep, ctx) == length


def test_frobenius_orbits_rejects_open_set():
    with pytest.raises(NotFrobeniusClosed):
        frobenius_orbits({2}, GF8)           # 2^2 = 4 escapes


def test_transform_beta():
    for b in range(8):
        assert transform_beta(1, 1, b, GF8) == b
    for a in range(1, 8):
        assert transform_beta(1, a, a, GF8) == GF8.pow(a, 3)   # a^(1-5) = a^3
    with pytest.raises(ZeroAlpha):
        transform_beta(1, 0, 1, GF8)


def test_transform_beta_preserves_rootlessness():
    for alpha in range(1, 16):
        for beta in range(16):
            lhs = count_roots(1, alpha, beta, GF16) == 0
            rhs = count_roots(1, 1, transform_beta(1, alpha, beta, GF16), GF16) == 0
            assert lhs == rhs


# (r, p) pairs from the subfield-embedding contract; m = r*p
EMBED_CASES = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 3), (5, 2)]


@pytest.mark.parametrize("r,p", EMBED_CASES)
def test_embedding_is_field_homomorphism(r, p):
    sub, sup = default_ctx(r), default_ctx(r * p)
    emb = subfield_embedding(sub, sup)
    assert emb[0] == 0 and emb[1] == 1
    for a in range(sub.order):
        for b in range(sub.order):
            assert emb[a ^ b] == emb[a] ^ emb[b]
            assert int(emb[sub.mul(a, b)]) == sup.mul(int(emb[a]), int(emb[b]))


@pytest.mark.parametrize("r,p", EMBED_CASES)
def test_subfield_root_transfer(r, p):
    # p != 3: rootless betas stay rootless upstairs; p = 3: all gain roots
    m = r * p
    sub, sup = default_ctx(r), default_ctx(m)
    k = 1
    emb = subfield_embedding(sub, sup)
    phi_up = phi_set(k, sup)
    for beta in phi_set(k, sub):
        lifted = int(emb[beta])
        if p == 3:
            assert lifted not in phi_up
            assert count_roots(k, 1, lifted, sup) == 3
        else:
            assert lifted in phi_up


def test_beta_set_serialization():
    phi = phi_set(1, GF16)
    data = phi.to_json()
    assert data == {"m": 4, "k": 1, "elements": ["0x1", "0x9", "0xB", "0xD", "0xE"]}
    assert 9 in phi and 2 not in phi
    assert len(phi) == 5


def test_orbit_serialization():
    dec = frobenius_orbits(phi_set(1, GF16), GF16)
    data = dec.to_json()
    assert data["total"] == 5
    assert data["orbits"][0] == {"representative": "0x1", "length": 1}


def test_json_round_trips():
    phi = phi_set(1, GF16)
    assert BetaSet.from_json(phi.to_json()) == phi
    dec = frobenius_orbits(phi, GF16)
    from taniapn.poly_roots import OrbitDecomposition
    assert OrbitDecomposition.from_json(dec.to_json()) == dec
