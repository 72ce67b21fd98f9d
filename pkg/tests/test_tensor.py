from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from pentagon.errors import LegMismatch, ShapeError
from pentagon.field import QQ
from pentagon.linalg import Mat, kernel_basis
from pentagon.tensor import (LegMap, Space, embed_legs, from_tensor, image_basis, kron, merge_legs,
                             permute_legs, slice_map, to_tensor)

from conftest import matrices

A2, B3, C2 = Space("A", 2), Space("B", 3), Space("C", 2)


def legmap(draw, cod, dom):
    rows = 1
    for s in cod:
        rows *= s.dim
    cols = 1
    for s in dom:
        cols *= s.dim
    return LegMap(cod, dom, draw(matrices(rows=rows, cols=cols)))


def test_space_rejects_zero_dim():
    with pytest.raises(ShapeError):
        Space("Z", 0)


def test_composition_checks_legs():
    X = LegMap.identity(QQ, (A2,))
    Y = LegMap.identity(QQ, (C2,))
    with pytest.raises(LegMismatch):
        X @ Y


def test_lex_order_leftmost_most_significant():
    e = lambda i, n: LegMap((Space("x", n),), (), Mat.from_entries(QQ, n, 1, [(i, 0, 1)]))
    v = kron(e(1, 2), e(2, 3))
    assert v.mat.column(0) == {1 * 3 + 2: 1}


def test_flip_on_basis():
    t = permute_legs((1, 0), (A2, B3), QQ)
    assert t.codomain == (B3, A2)
    # a (x) b at index a*3+b goes to b (x) a at index b*2+a
    for a in range(2):
        for b in range(3):
            assert t.mat.column(a * 3 + b) == {b * 2 + a: 1}


@pytest.mark.parametrize("sigma", list(permutations(range(3))))
@pytest.mark.parametrize("tau", list(permutations(range(3))))
def test_permutation_composition(sigma, tau):
    legs = (A2, B3, C2)
    P_tau = permute_legs(tau, legs, QQ)
    P_sigma = permute_legs(sigma, P_tau.codomain, QQ)
    rho = tuple(tau[sigma[k]] for k in range(3))
    assert P_sigma @ P_tau == permute_legs(rho, legs, QQ)


@settings(max_examples=30)
@given(st.data())
def test_embed_matches_conjugated_kron(data):
    X = legmap(data.draw, (A2, C2), (A2, C2))
    amb = (A2, B3, C2)
    # X on legs (0, 2) equals t23 (X (x) I_B) t23
    inner = kron(X, LegMap.identity(QQ, (B3,)))
    right = permute_legs((0, 2, 1), amb, QQ)
    left = permute_legs((0, 2, 1), inner.codomain, QQ)
    assert embed_legs(X, (0, 2), amb) == left @ inner @ right
    assert embed_legs(X, (0, 1), (A2, C2, B3)) == inner


@settings(max_examples=30)
@given(st.data())
def test_kron_mixed_product(data):
    X = legmap(data.draw, (A2,), (B3,))
    Y = legmap(data.draw, (B3,), (A2,))
    Z = legmap(data.draw, (C2,), (C2,))
    W = legmap(data.draw, (C2,), (C2,))
    assert kron(X, Z) @ kron(Y, W) == kron(X @ Y, Z @ W)


@settings(max_examples=30)
@given(st.data())
def test_tensor_roundtrip_and_slices(data):
    X = legmap(data.draw, (A2, B3), (C2, A2))
    vec, fdims = to_tensor(X)
    assert fdims == [4, 6]
    assert from_tensor(QQ, vec, X.codomain, X.domain) == X
    # the (0,0) slice on the first leg pair is read off the first Hom factor
    S = slice_map(X, 0, 0, 1, 0)
    for (r, c, v) in S.mat.items():
        assert vec[(1 * 2 + 0) * 6 + r * 2 + c] == v


def test_merge_keeps_matrix():
    X = LegMap.identity(QQ, (A2, B3))
    Y = merge_legs(X, [(0, 2, "AB")], [(0, 2, "AB")])
    assert Y.codomain == (Space("AB", 6),) and Y.mat == X.mat


def unit(n, i, j):
    V = Space("V", n)
    return LegMap((V,), (V,), Mat(QQ, n, n, {i: {j: 1}}))


def test_kron_examples():
    I2, I3 = LegMap.identity(QQ, (A2,)), LegMap.identity(QQ, (B3,))
    assert kron(I2, I3).mat.is_identity() and kron(I2, I3).mat.shape == (6, 6)
    one = LegMap.identity(QQ, (Space("one", 1),))
    assert kron(I2, one).mat == I2.mat and len(kron(I2, one).domain) == 2
    # E_12 (x) E_21: single 1 at row (0, 1), column (1, 0) in 0-based lex order
    K = kron(unit(2, 0, 1), unit(2, 1, 0))
    assert list(K.mat.items()) == [(0 * 2 + 1, 1 * 2 + 0, 1)]


def test_flip_braid_relation():
    V = Space("V", 2)
    t = permute_legs((1, 0), (V, V), QQ)
    amb = (V, V, V)
    t12, t13, t23 = (embed_legs(t, p, amb) for p in ((0, 1), (0, 2), (1, 2)))
    assert t12 @ t13 == t23 @ t12
    assert permute_legs((0, 1), (V, V), QQ).mat.is_identity()


@settings(max_examples=20)
@given(st.data())
def test_disjoint_embeddings_commute(data):
    X = legmap(data.draw, (A2,), (A2,))
    Y = legmap(data.draw, (B3, C2), (B3, C2))
    amb = (A2, B3, C2)
    assert embed_legs(X, (0,), amb) @ embed_legs(Y, (1, 2), amb) == \
        embed_legs(Y, (1, 2), amb) @ embed_legs(X, (0,), amb)


def test_embed_heterogeneous_legs():
    V, M = Space("V", 2), Space("M", 2)
    F = LegMap((V, V), (V, M), Mat.from_dense(QQ, [[1, 2, 0, 0], [0, 1, 0, 0],
                                                   [0, 0, 0, 1], [3, 0, 1, 0]]))
    F13 = embed_legs(F, (0, 2), (V, M, M))
    assert F13.codomain == (V, M, V) and F13.domain == (V, M, M)
    Q_in = permute_legs((0, 2, 1), (V, M, M), QQ)
    Q_out = permute_legs((0, 2, 1), (V, V, M), QQ)
    assert F13 == Q_out @ kron(F, LegMap.identity(QQ, (M,))) @ Q_in
    with pytest.raises(LegMismatch):
        embed_legs(F, (1, 2), (V, M, M))


def test_slice_of_identity():
    M = Space("M", 3)
    I = LegMap.identity(QQ, (M, M))
    for i in range(3):
        for j in range(3):
            S = slice_map(I, 0, 0, i, j)
            assert S.mat.is_identity() if i == j else S.mat.is_zero()


def test_image_and_kernel_examples():
    I = LegMap.identity(QQ, (A2,))
    assert image_basis([I, I.scale(2)]) == [I]
    assert len(kernel_basis(Mat.zeros(QQ, 3, 3))) == 3
    with pytest.raises(LegMismatch):
        image_basis([I, LegMap.identity(QQ, (C2,))])
