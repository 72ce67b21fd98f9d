"""Sparse exact matrices and Gaussian elimination.

A :class:`Mat` stores only its nonzero entries as ``{row: {col: value}}``.
Vectors are plain ``{index: value}`` dicts. All operations are exact; a matrix
is treated as immutable once built.
"""

from __future__ import annotations

from .errors import FieldMismatch, NoSolution, ShapeError, Singular
from .field import Field


def _clean(field: Field, acc: dict) -> dict:
    out = {}
    for j, v in acc.items():
        v = field.reduce(v)
        if v:
            out[j] = v
    return out


class Mat:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else {}

    # construction

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols, {})

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def from_entries(cls, field, nrows, ncols, entries):
        """Sum ``(i, j, value)`` triples into a matrix."""
        acc: dict = {}
        for i, j, v in entries:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ShapeError(f"entry ({i}, {j}) outside {nrows}x{ncols}")
            row = acc.setdefault(i, {})
            row[j] = row.get(j, 0) + v
        rows = {}
        for i, row in acc.items():
            row = _clean(field, row)
            if row:
                rows[i] = row
        return cls(field, nrows, ncols, rows)

    @classmethod
    def from_dense(cls, field, grid, ncols=None):
        grid = [list(r) for r in grid]
        nrows = len(grid)
        if ncols is None:
            ncols = len(grid[0]) if grid else 0
        entries = []
        for i, r in enumerate(grid):
            if len(r) != ncols:
                raise ShapeError(f"row {i} has {len(r)} entries, expected {ncols}")
            entries.extend((i, j, field.convert(v)) for j, v in enumerate(r) if v)
        return cls.from_entries(field, nrows, ncols, entries)

    @classmethod
    def from_columns(cls, field, nrows, columns):
        """Matrix whose j-th column is the sparse vector ``columns[j]``."""
        entries = [(i, j, v) for j, col in enumerate(columns) for i, v in col.items()]
        return cls.from_entries(field, nrows, len(columns), entries)

    @classmethod
    def from_rows(cls, field, ncols, rows):
        rows = list(rows)
        return cls(field, len(rows), ncols, {i: dict(r) for i, r in enumerate(rows) if r})

    @classmethod
    def permutation(cls, field, images):
        """Matrix sending basis vector ``j`` to basis vector ``images[j]``."""
        n = len(images)
        return cls(field, n, n, {images[j]: {j: 1} for j in range(n)})

    # access

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows.get(i, {}).get(j, 0)

    def to_dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, row in self.rows.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def items(self):
        for i, row in self.rows.items():
            for j, v in row.items():
                yield i, j, v

    def column(self, j) -> dict:
        return {i: row[j] for i, row in self.rows.items() if j in row}

    def columns(self) -> list[dict]:
        cols: list[dict] = [{} for _ in range(self.ncols)]
        for i, row in self.rows.items():
            for j, v in row.items():
                cols[j][i] = v
        return cols

    def row(self, i) -> dict:
        return dict(self.rows.get(i, {}))

    def __repr__(self):
        return f"Mat({self.field}, {self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # arithmetic

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot compose {self.shape} with {other.shape}")
        field = self.field
        orows = other.rows
        rows = {}
        for i, row in self.rows.items():
            acc: dict = {}
            for k, a in row.items():
                brow = orows.get(k)
                if brow is None:
                    continue
                for j, b in brow.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = _clean(field, acc)
            if acc:
                rows[i] = acc
        return Mat(field, self.nrows, other.ncols, rows)

    def apply(self, vec: dict) -> dict:
        acc: dict = {}
        for i, row in self.rows.items():
            s = 0
            for j, v in row.items():
                x = vec.get(j)
                if x:
                    s += v * x
            if s:
                acc[i] = s
        return _clean(self.field, acc)

    def _combine(self, other, sign):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")
        field = self.field
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, orow in other.rows.items():
            row = rows.setdefault(i, {})
            for j, v in orow.items():
                row[j] = row.get(j, 0) + sign * v
        out = {}
        for i, row in rows.items():
            row = _clean(field, row)
            if row:
                out[i] = row
        return Mat(field, self.nrows, self.ncols, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Mat":
        field = self.field
        c = field.reduce(c)
        if not c:
            return Mat.zeros(field, self.nrows, self.ncols)
        rows = {i: _clean(field, {j: c * v for j, v in r.items()}) for i, r in self.rows.items()}
        return Mat(field, self.nrows, self.ncols, {i: r for i, r in rows.items() if r})

    def transpose(self) -> "Mat":
        rows: dict = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                rows.setdefault(j, {})[i] = v
        return Mat(self.field, self.ncols, self.nrows, rows)

    def kron(self, other: "Mat") -> "Mat":
        self._check(other)
        field = self.field
        bn, bm = other.nrows, other.ncols
        rows = {}
        for i, arow in self.rows.items():
            for k, brow in other.rows.items():
                row = {}
                for j, a in arow.items():
                    base = j * bm
                    for l, b in brow.items():
                        v = field.reduce(a * b)
                        if v:
                            row[base + l] = v
                if row:
                    rows[i * bn + k] = row
        return Mat(field, self.nrows * bn, self.ncols * bm, rows)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.rows

    def is_identity(self) -> bool:
        if self.nrows != self.ncols or len(self.rows) != self.nrows:
            return False
        return all(row == {i: 1} for i, row in self.rows.items())

    def diff_count(self, other: "Mat") -> int:
        """Number of entries where the two matrices differ."""
        return (self - other).nnz()

    # elimination

    def rank(self) -> int:
        ech = Echelon(self.field, self.ncols)
        for row in self.rows.values():
            ech.add(row)
        return ech.rank

    def inverse(self) -> "Mat":
        if self.nrows != self.ncols:
            raise Singular(f"non-square {self.shape} matrix has no inverse")
        n = self.nrows
        field = self.field
        ech = Echelon(field, 2 * n)
        for i in range(n):
            row = dict(self.rows.get(i, {}))
            row[n + i] = 1
            ech.add(row)
        inv_rows = {}
        for piv, row in ech.rows.items():
            if piv >= n:
                raise Singular("matrix is singular")
            tail = {j - n: v for j, v in row.items() if j >= n}
            if any(j < n and j != piv for j in row):
                raise Singular("matrix is singular")
            if tail:
                inv_rows[piv] = tail
        if len(ech.rows) != n:
            raise Singular("matrix is singular")
        return Mat(field, n, n, inv_rows)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Rows are stored by pivot column; every stored row has a 1 at its pivot and
    zeros at every other pivot column.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def reduce(self, vec: dict) -> dict:
        field = self.field
        v = dict(vec)
        # stored rows vanish on each other's pivots, so one pass suffices
        for p in [j for j in vec if j in self.rows]:
            c = field.reduce(vec[p])
            if not c:
                continue
            for j, x in self.rows[p].items():
                v[j] = v.get(j, 0) - c * x
        return _clean(field, v)

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        field = self.field
        piv = min(v)
        c = field.inv(v[piv])
        v = _clean(field, {j: c * x for j, x in v.items()})
        for p, row in self.rows.items():
            a = row.get(piv)
            if a:
                for j, x in v.items():
                    row[j] = row.get(j, 0) - a * x
                self.rows[p] = _clean(field, row)
        self.rows[piv] = v
        return True

    def basis(self) -> list[dict]:
        return [dict(self.rows[p]) for p in sorted(self.rows)]

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def coords(self, vec: dict) -> list | None:
        """Coordinates of ``vec`` in :meth:`basis`, or None when outside the span."""
        if self.reduce(vec):
            return None
        return [self.field.reduce(vec.get(p, 0)) for p in sorted(self.rows)]


def rref(field: Field, vectors, ncols: int) -> tuple[list[dict], list[int]]:
    ech = Echelon(field, ncols)
    for v in vectors:
        ech.add(v)
    return ech.basis(), ech.pivots


def kernel_basis(A: Mat) -> list[dict]:
    """Canonical (RREF) basis of the null space of ``A``."""
    ech = Echelon(A.field, A.ncols)
    for row in A.rows.values():
        ech.add(row)
    pivots = set(ech.rows)
    field = A.field
    vectors = []
    for free in range(A.ncols):
        if free in pivots:
            continue
        v = {free: 1}
        for p, row in ech.rows.items():
            x = row.get(free)
            if x:
                v[p] = field.reduce(-x)
        vectors.append(v)
    basis, _ = rref(field, vectors, A.ncols)
    return basis


def solve_linear(A: Mat, b: dict) -> dict:
    """Some exact ``x`` with ``A x = b``; raises :class:`NoSolution`."""
    n = A.ncols
    ech = Echelon(A.field, n + 1)
    for i in range(A.nrows):
        row = dict(A.rows.get(i, {}))
        if b.get(i):
            row[n] = b[i]
        ech.add(row)
    if n in ech.rows:
        raise NoSolution("inconsistent linear system")
    return {p: row[n] for p, row in ech.rows.items() if row.get(n)}


def vec_sub(field, a: dict, b: dict) -> dict:
    out = dict(a)
    for j, v in b.items():
        out[j] = out.get(j, 0) - v
    return _clean(field, out)


def vec_combination(field, coeffs, vectors) -> dict:
    acc: dict = {}
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for j, x in v.items():
            acc[j] = acc.get(j, 0) + c * x
    return _clean(field, acc)


def dot(field, a: dict, b: dict):
    if len(a) > len(b):
        a, b = b, a
    return field.reduce(sum(v * b[j] for j, v in a.items() if j in b))


def kron_vec(a: dict, b: dict, nb: int, field) -> dict:
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            v = field.reduce(x * y)
            if v:
                out[i * nb + j] = v
    return out


def minimal_polynomial(A: Mat) -> list:
    """Monic minimal polynomial of a square matrix, coefficients low degree first.

    Found as the first linear dependency among ``I, A, A^2, ...``; each power is
    tagged with an extra coordinate so the dependency can be read off.
    """
    if A.nrows != A.ncols:
        raise ShapeError("minimal polynomial of a non-square matrix")
    n = A.nrows
    field = A.field
    big = n * n
    ech = Echelon(field, big + n + 2)
    power = Mat.identity(field, n)
    for k in range(n + 1):
        v = {i * n + j: x for i, j, x in power.items()}
        v[big + k] = 1
        r = ech.reduce(v)
        if all(j >= big for j in r):
            # r = tag part of  A^k - (combination of lower powers) = 0
            lead = r[big + k]
            inv = field.inv(lead)
            return [field.reduce(inv * r.get(big + j, 0)) for j in range(k + 1)]
        ech.add(r)
        power = power @ A
    raise AssertionError("Cayley-Hamilton bound exceeded")


def characteristic_polynomial(A: Mat) -> list:
    """Characteristic polynomial det(tI - A), low degree first.

    Hessenberg reduction followed by the standard recurrence; valid over any
    field. Dense, so only meant for small matrices.
    """
    if A.nrows != A.ncols:
        raise ShapeError("characteristic polynomial of a non-square matrix")
    field = A.field
    n = A.nrows
    H = A.to_dense()
    red = field.reduce
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        inv = field.inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = red(H[i][m - 1] * inv)
            if not u:
                continue
            for j in range(n):
                H[i][j] = red(H[i][j] - u * H[m][j])
            for row in H:
                row[m] = red(row[m] + u * row[i])
    # p[k] = char poly of leading k x k block, as coefficient lists
    polys = [[1]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        # t * p_{k-1} - h_kk * p_{k-1}
        cur = [0] + prev
        for d, c in enumerate(prev):
            cur[d] = red(cur[d] - H[k - 1][k - 1] * c)
        prod = 1
        for i in range(1, k):
            prod = red(prod * H[k - i][k - i - 1])
            coef = red(prod * H[k - i - 1][k - 1])
            if coef:
                for d, c in enumerate(polys[k - i - 1]):
                    cur[d] = red(cur[d] - coef * c)
        polys.append([red(c) for c in cur])
    return polys[n]


def poly_eval_matrix(coeffs, A: Mat) -> Mat:
    """Horner evaluation of a polynomial (low degree first) at a square matrix."""
    field = A.field
    n = A.nrows
    result = Mat.zeros(field, n, n)
    ident = Mat.identity(field, n)
    for c in reversed(coeffs):
        result = result @ A + ident.scale(c)
    return result


def solve_many(A: Mat, rhs: list[dict]) -> list[dict | None]:
    """Solve ``A x = b`` for several right-hand sides with one elimination.

    Entry ``r`` of the result is a solution for ``rhs[r]`` or None when that
    system is inconsistent.
    """
    n = A.ncols
    cols = [dict() for _ in range(A.nrows)]
    for r, b in enumerate(rhs):
        for i, v in b.items():
            cols[i][n + r] = v
    ech = Echelon(A.field, n + len(rhs))
    for i in range(A.nrows):
        row = dict(A.rows.get(i, {}))
        row.update(cols[i])
        ech.add(row)
    bad = set()
    for p, row in ech.rows.items():
        if p >= n:
            bad.update(j - n for j in row)
    out = []
    for r in range(len(rhs)):
        if r in bad:
            out.append(None)
            continue
        out.append({p: row[n + r] for p, row in ech.rows.items() if p < n and row.get(n + r)})
    return out
