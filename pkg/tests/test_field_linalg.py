from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pentagon.errors import FieldError, NoSolution, ParseError, Singular
from pentagon.field import GF, QQ, field_from_name, is_prime
from pentagon.linalg import (Mat, characteristic_polynomial, kernel_basis, minimal_polynomial,
                             poly_eval_matrix, rref, solve_linear, solve_many)

from conftest import dense_kron, dense_mul, leibniz_det, matrices


def test_rational_normalization():
    assert QQ.reduce(Fraction(4, 2)) == 2 and type(QQ.reduce(Fraction(4, 2))) is int
    assert QQ.format(Fraction(-3, 6)) == "-1/2"
    assert QQ.parse("3/6") == Fraction(1, 2)
    assert QQ.parse("-7") == -7


@pytest.mark.parametrize("text", ["-2/-4", "2/-4", "1/0", "01", "1.5", "", " 1", "+1"])
def test_rational_grammar_rejects(text):
    with pytest.raises(ParseError):
        QQ.parse(text)


def test_prime_field():
    F = GF(5)
    assert F.reduce(-1) == 4
    assert F.inv(2) == 3
    assert F.parse("4") == 4
    for bad in ("5", "7", "-1", "1/2"):
        with pytest.raises(ParseError):
            F.parse(bad)
    with pytest.raises(FieldError):
        GF(6)
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_field_names():
    assert field_from_name("Q") is QQ
    assert field_from_name("F5") == GF(5) == field_from_name("GF(5)")
    with pytest.raises(FieldError):
        field_from_name("R")


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.data())
def test_product_matches_dense(n, k, m, data):
    A = data.draw(matrices(rows=n, cols=k))
    B = data.draw(matrices(rows=k, cols=m))
    assert (A @ B).to_dense() == dense_mul(A.to_dense(), B.to_dense())


@given(matrices(max_dim=3), matrices(max_dim=3), matrices(max_dim=3))
def test_kron_associative_and_dense(A, B, C):
    assert A.kron(B).to_dense() == dense_kron(A.to_dense(), B.to_dense())
    assert A.kron(B).kron(C) == A.kron(B.kron(C))


@pytest.mark.parametrize("field", [QQ, GF(5)])
@given(data=st.data())
def test_rank_nullity(field, data):
    A = data.draw(matrices(field))
    ker = kernel_basis(A)
    assert A.rank() + len(ker) == A.ncols
    for z in ker:
        assert not A.apply(z)


@given(matrices(rows=3, cols=3))
def test_inverse_and_determinant_oracle(A):
    det = leibniz_det(A.to_dense())
    if det == 0:
        assert not A.is_invertible()
        with pytest.raises(Singular):
            A.inverse()
    else:
        assert (A @ A.inverse()).is_identity()


@given(matrices(max_dim=4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_roundtrip(A, xs):
    x = {i: v for i, v in enumerate(xs[:A.ncols]) if v}
    b = A.apply(x)
    sol = solve_linear(A, b)
    assert A.apply(sol) == b
    many = solve_many(A, [b, {}])
    assert A.apply(many[0]) == b and many[1] == {}


def test_solve_inconsistent():
    A = Mat.from_dense(QQ, [[1, 1], [2, 2]])
    with pytest.raises(NoSolution):
        solve_linear(A, {0: 1, 1: 3})
    assert solve_many(A, [{0: 1, 1: 3}, {0: 1, 1: 2}])[0] is None


def test_rref_is_canonical():
    vecs = [{0: 2, 1: 4}, {0: 1, 2: 1}]
    basis, pivots = rref(QQ, vecs, 3)
    basis2, _ = rref(QQ, [{0: 1, 2: 1}, {0: 3, 1: 6}, {1: 1, 2: -Fraction(1, 2)}], 3)
    assert basis == basis2 and pivots == [0, 1]


@settings(max_examples=40)
@given(matrices(rows=3, cols=3))
def test_polynomials(A):
    chi = characteristic_polynomial(A)
    m = minimal_polynomial(A)
    assert chi[-1] == 1 and m[-1] == 1
    assert poly_eval_matrix(chi, A).is_zero()     # Cayley-Hamilton
    assert poly_eval_matrix(m, A).is_zero()
    assert len(m) <= len(chi)
    # constant term of chi is (-1)^n det
    assert chi[0] == -leibniz_det(A.to_dense())
    # m divides chi: remainder of polynomial long division is zero
    rem = list(chi)
    while len(rem) >= len(m):
        c = rem[-1]
        shift = len(rem) - len(m)
        for i, mi in enumerate(m):
            rem[shift + i] -= c * mi
        rem.pop()
    assert not any(rem)


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=5))
def test_against_sympy(A):
    sympy = pytest.importorskip("sympy")
    S = sympy.Matrix(A.to_dense())
    assert A.rank() == S.rank()
    if A.nrows == A.ncols:
        lam = sympy.Symbol("t")
        coeffs = sympy.Poly(S.charpoly(lam).as_expr(), lam).all_coeffs()[::-1]
        assert [Fraction(int(c.p), int(c.q)) for c in coeffs] == characteristic_polynomial(A)
        if A.is_invertible():
            assert A.inverse().to_dense() == [[Fraction(int(x.p), int(x.q)) for x in row]
                                              for row in S.inv().tolist()]
