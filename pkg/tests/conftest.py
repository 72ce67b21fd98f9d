"""Shared strategies and a naive dense oracle used to cross-check the sparse code."""

import sys
from fractions import Fraction
from itertools import permutations

from hypothesis import strategies as st

from pentagon.field import GF, QQ
from pentagon.linalg import Mat


FIELDS = [QQ, GF(5)]


def dense_mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
            for i in range(len(A))]


def dense_kron(A, B):
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def leibniz_det(A):
    n = len(A)
    total = Fraction(0)
    for p in permutations(range(n)):
        term = Fraction(perm_sign(p))
        for i in range(n):
            term *= A[i][p[i]]
        total += term
    return total


def reduce_grid(field, grid):
    return [[field.reduce(x) for x in row] for row in grid]


@st.composite
def matrices(draw, field=QQ, rows=None, cols=None, max_dim=4, bound=3):
    n = rows if rows is not None else draw(st.integers(1, max_dim))
    m = cols if cols is not None else draw(st.integers(1, max_dim))
    entries = st.integers(-bound, bound)
    grid = [[draw(entries) for _ in range(m)] for _ in range(n)]
    return Mat.from_dense(field, reduce_grid(field, grid), m)


@st.composite
def invertible_matrices(draw, field=QQ, n=2, bound=3):
    """Unit lower triangular times upper triangular with nonzero diagonal."""
    entry = st.integers(-bound, bound)
    nonzero = entry.filter(lambda x: field.reduce(x) != 0)
    L = [[1 if i == j else (field.reduce(draw(entry)) if j < i else 0) for j in range(n)]
         for i in range(n)]
    U = [[field.reduce(draw(nonzero)) if i == j else (field.reduce(draw(entry)) if j > i else 0)
          for j in range(n)] for i in range(n)]
    return Mat.from_dense(field, L, n) @ Mat.from_dense(field, U, n)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
