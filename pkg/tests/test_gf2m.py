"""Field arithmetic: examples, axioms, and the scalar/vector path agreement."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taniapn.errors import InvalidParams, ZeroInput, ZeroInverse
from taniapn.gf2m import (
    MODULUS_TABLE,
    FieldCtx,
    coprime_residues,
    default_ctx,
    irreducibles,
    is_irreducible,
    smallest_irreducible,
)

GF8 = FieldCtx(3, 0xB)


def test_modulus_table_spot_values():
    assert MODULUS_TABLE[1] == 0x3
    assert MODULUS_TABLE[2] == 0x7
    assert MODULUS_TABLE[3] == 0xB
    assert MODULUS_TABLE[4] == 0x13
    assert MODULUS_TABLE[8] == 0x11B


def test_modulus_table_regenerates():
    for m in range(1, 33):
        assert smallest_irreducible(m) == MODULUS_TABLE[m]


def test_irreducibility_rejects_products():
    assert not is_irreducible(0b1111)        # (X+1)(X^2+X+1)
    assert not is_irreducible(0b101)         # (X+1)^2
    assert is_irreducible(0b111)
    assert is_irreducible(0x11B)


def test_ctx_validation():
    with pytest.raises(InvalidParams):
        FieldCtx(0)
    with pytest.raises(InvalidParams):
        FieldCtx(33)
    with pytest.raises(InvalidParams):
        FieldCtx(3, 0xF)                     # reducible
    with pytest.raises(InvalidParams):
        FieldCtx(3, 0x13)                    # wrong degree
    with pytest.raises(InvalidParams):
        FieldCtx(3, 0xA)                     # no constant term


def test_mul_examples():
    assert GF8.mul(0b010, 0b010) == 0b100    # X * X = X^2
    assert GF8.mul(0b010, 0b100) == 0b011    # X^3 = X + 1
    for a in range(8):
        assert GF8.mul(a, 0b001) == a


def test_pow2k_examples():
    assert GF8.pow2k(0b010, 1) == 0b100
    for a in range(8):
        assert GF8.pow2k(a, 0) == a
        assert GF8.pow2k(a, 3) == a          # Frobenius order m
        assert GF8.pow2k(a, -1) == GF8.pow2k(a, 2)


def test_pow_examples():
    assert GF8.pow(0b010, 3) == 0b011
    assert GF8.pow(0, 0) == 1
    for a in range(1, 8):
        assert GF8.pow(a, 1) == a
        assert GF8.pow(a, 7) == 1            # Lagrange


def test_inverse_examples():
    assert GF8.inverse(1) == 1
    assert GF8.inverse(0b010) == 0b101       # X * (X^2 + 1) = 1
    rng = np.random.default_rng(7)
    ctx = default_ctx(11)
    for a in rng.integers(1, ctx.order, size=100):
        assert ctx.mul(int(a), ctx.inverse(int(a))) == 1
    with pytest.raises(ZeroInverse):
        GF8.inverse(0)


def test_is_cube():
    ctx = default_ctx(4)
    assert ctx.is_cube(1)
    brute = {ctx.pow(c, 3) for c in range(1, 16)}
    assert sum(ctx.is_cube(a) for a in range(1, 16)) == len(brute) == 5
    for a in range(1, 16):
        assert ctx.is_cube(a) == (a in brute)
    for a in range(1, 32):                   # odd m: cubing is a bijection
        assert default_ctx(5).is_cube(a)
    with pytest.raises(ZeroInput):
        ctx.is_cube(0)


def test_cube_count_even_m():
    for m in (2, 4, 6, 8):
        ctx = default_ctx(m)
        cubes = sum(ctx.is_cube(a) for a in range(1, ctx.order))
        assert cubes == (ctx.order - 1) // 3


@settings(max_examples=300, deadline=None)
@given(
    m=st.sampled_from([2, 3, 5, 8, 13, 16, 18, 24]),
    data=st.data(),
)
def test_field_axioms(m, data):
    ctx = default_ctx(m)
    elem = st.integers(min_value=0, max_value=ctx.order - 1)
    a, b, c = data.draw(elem), data.draw(elem), data.draw(elem)
    assert ctx.mul(a, b) == ctx.mul(b, a)
    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
    assert ctx.mul(a, b ^ c) == ctx.mul(a, b) ^ ctx.mul(a, c)
    assert ctx.mul(a, 1) == a
    assert ctx.mul(a, 0) == 0


@settings(max_examples=200, deadline=None)
@given(
    m=st.sampled_from([3, 6, 11, 18]),
    data=st.data(),
)
def test_frobenius_is_field_automorphism(m, data):
    ctx = default_ctx(m)
    elem = st.integers(min_value=0, max_value=ctx.order - 1)
    a, b = data.draw(elem), data.draw(elem)
    fr = lambda x: ctx.pow2k(x, 1)
    assert fr(a ^ b) == fr(a) ^ fr(b)
    assert fr(ctx.mul(a, b)) == ctx.mul(fr(a), fr(b))
    k = data.draw(st.integers(min_value=0, max_value=m - 1))
    assert ctx.pow2k(ctx.pow2k(a, k), m - k) == a


def test_generator_has_full_order():
    for m in (1, 2, 3, 5, 8, 12):
        ctx = default_ctx(m)
        g = ctx.generator
        seen = set()
        x = 1
        for _ in range(ctx.order - 1):
            seen.add(x)
            x = ctx.mul(x, g)
        assert x == 1 and len(seen) == ctx.order - 1


@pytest.mark.parametrize("m", [1, 3, 8, 16, 18, 24, 26])
def test_vector_ops_match_scalar(m):
    # m <= 24 exercises the log-table path, beyond it the shift-XOR path;
    # the scalar side is always the raw loop
    ctx = default_ctx(m)
    rng = np.random.default_rng(m)
    a = rng.integers(0, ctx.order, size=200, dtype=np.uint32)
    b = rng.integers(0, ctx.order, size=200, dtype=np.uint32)
    mv = ctx.mul_vec(a, b)
    assert all(int(mv[i]) == ctx.mul(int(a[i]), int(b[i])) for i in range(200))
    sv = ctx.square_vec(a)
    assert all(int(sv[i]) == ctx.mul(int(a[i]), int(a[i])) for i in range(200))
    for k in (0, 1, m - 1):
        pv = ctx.pow2k_vec(a, k)
        assert all(int(pv[i]) == ctx.pow2k(int(a[i]), k) for i in range(200))
    for e in (0, 1, 3, (1 << min(m, 8)) + 1, ctx.order - 1):
        ev = ctx.pow_vec(a, e)
        assert all(int(ev[i]) == ctx.pow(int(a[i]), e) for i in range(200))


def test_irreducibles_generator():
    first_two = []
    for f in irreducibles(4):
        first_two.append(f)
        if len(first_two) == 2:
            break
    assert first_two[0] == 0x13
    assert is_irreducible(first_two[1]) and first_two[1] != 0x13


def test_coprime_residues():
    assert coprime_residues(1) == [1]
    assert coprime_residues(6) == [1, 5]
    assert coprime_residues(12) == [1, 5, 7, 11]
