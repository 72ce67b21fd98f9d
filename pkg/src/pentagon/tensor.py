"""Linear maps between tensor products of labelled spaces.

Multi-leg bases are ordered lexicographically with the leftmost leg most
significant, so ``e_i (x) e_j`` in ``k^m (x) k^n`` is basis vector ``i*n + j``.
Leg positions in this module are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from .errors import LegMismatch, ShapeError
from .field import Field
from .linalg import Mat, rref


@dataclass(frozen=True)
class Space:
    label: str
    dim: int

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ShapeError(f"space {self.label!r} must have positive dimension, got {self.dim!r}")

    def __str__(self):
        return f"{self.label}[{self.dim}]"


Legs = tuple  # tuple[Space, ...]


def legs_dim(legs) -> int:
    return prod(s.dim for s in legs)


def _strides(dims):
    out = [1] * len(dims)
    for k in range(len(dims) - 2, -1, -1):
        out[k] = out[k + 1] * dims[k + 1]
    return out


def _fmt(legs):
    return "(x)".join(str(s) for s in legs) or "k"


class LegMap:
    """A matrix whose rows are indexed by ``codomain`` legs and columns by ``domain`` legs."""

    __slots__ = ("codomain", "domain", "mat")

    def __init__(self, codomain, domain, mat: Mat):
        codomain, domain = tuple(codomain), tuple(domain)
        if mat.shape != (legs_dim(codomain), legs_dim(domain)):
            raise ShapeError(
                f"matrix shape {mat.shape} does not match legs {_fmt(domain)} -> {_fmt(codomain)}"
            )
        self.codomain = codomain
        self.domain = domain
        self.mat = mat

    # construction

    @classmethod
    def identity(cls, field: Field, legs):
        legs = tuple(legs)
        return cls(legs, legs, Mat.identity(field, legs_dim(legs)))

    @classmethod
    def zeros(cls, field, codomain, domain):
        return cls(codomain, domain, Mat.zeros(field, legs_dim(codomain), legs_dim(domain)))

    @classmethod
    def from_dense(cls, field, codomain, domain, grid):
        return cls(codomain, domain, Mat.from_dense(field, grid, legs_dim(domain)))

    @classmethod
    def from_function(cls, field, codomain, domain, fn):
        """Build from ``fn(col_multi_index) -> iterable of (row_multi_index, value)``."""
        codomain, domain = tuple(codomain), tuple(domain)
        cs = _strides([s.dim for s in codomain])
        ds = _strides([s.dim for s in domain])
        entries = []
        for col in product(*(range(s.dim) for s in domain)):
            j = sum(c * s for c, s in zip(col, ds))
            for row, v in fn(col):
                i = sum(r * s for r, s in zip(row, cs))
                entries.append((i, j, v))
        return cls(codomain, domain,
                   Mat.from_entries(field, legs_dim(codomain), legs_dim(domain), entries))

    # basics

    @property
    def field(self) -> Field:
        return self.mat.field

    def __repr__(self):
        return f"LegMap({_fmt(self.domain)} -> {_fmt(self.codomain)}, nnz={self.mat.nnz()})"

    def __matmul__(self, other: "LegMap") -> "LegMap":
        if self.domain != other.codomain:
            raise LegMismatch(f"cannot compose {_fmt(self.domain)} with {_fmt(other.codomain)}")
        return LegMap(self.codomain, other.domain, self.mat @ other.mat)

    def _same_type(self, other):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise LegMismatch(f"{self!r} and {other!r} have different leg types")

    def __add__(self, other):
        self._same_type(other)
        return LegMap(self.codomain, self.domain, self.mat + other.mat)

    def __sub__(self, other):
        self._same_type(other)
        return LegMap(self.codomain, self.domain, self.mat - other.mat)

    def __neg__(self):
        return LegMap(self.codomain, self.domain, -self.mat)

    def scale(self, c):
        return LegMap(self.codomain, self.domain, self.mat.scale(c))

    def __eq__(self, other):
        if not isinstance(other, LegMap):
            return NotImplemented
        return (self.codomain == other.codomain and self.domain == other.domain
                and self.mat == other.mat)

    __hash__ = None

    def inverse(self) -> "LegMap":
        return LegMap(self.domain, self.codomain, self.mat.inverse())

    def is_invertible(self) -> bool:
        return self.mat.is_invertible()

    def relabel(self, codomain=None, domain=None) -> "LegMap":
        """Same matrix, new leg lists (must have the same total dimensions)."""
        return LegMap(self.codomain if codomain is None else codomain,
                      self.domain if domain is None else domain, self.mat)

    def column(self, j) -> dict:
        return self.mat.column(j)


def kron(*maps: LegMap) -> LegMap:
    out = maps[0]
    for m in maps[1:]:
        out = LegMap(out.codomain + m.codomain, out.domain + m.domain, out.mat.kron(m.mat))
    return out


def permute_legs(perm, legs, field: Field) -> LegMap:
    """Permutation map on ``legs``: output leg ``k`` is input leg ``perm[k]``.

    With ``perm = (1, 0)`` on two equal legs this is the flip ``t``.
    """
    legs = tuple(legs)
    perm = tuple(perm)
    if sorted(perm) != list(range(len(legs))):
        raise ShapeError(f"{perm} is not a permutation of {len(legs)} legs")
    out_legs = tuple(legs[p] for p in perm)
    out_strides = _strides([s.dim for s in out_legs])
    cols = [sum(idx[perm[k]] * out_strides[k] for k in range(len(perm)))
            for idx in product(*(range(s.dim) for s in legs))]
    return LegMap(out_legs, legs, Mat.permutation(field, cols))


def flip(field: Field, a: Space, b: Space | None = None) -> LegMap:
    """``t: a (x) b -> b (x) a``."""
    return permute_legs((1, 0), (a, a if b is None else b), field)


def embed_legs(X: LegMap, positions, ambient) -> LegMap:
    """``X`` acting on legs ``positions`` of ``ambient`` and as identity elsewhere.

    ``X`` must have as many codomain legs as domain legs; the codomain of the
    result is ``ambient`` with ``X.codomain`` substituted at ``positions``.
    """
    ambient = tuple(ambient)
    positions = tuple(positions)
    if len(X.domain) != len(positions) or len(X.codomain) != len(positions):
        raise ShapeError(f"{X!r} does not act on {len(positions)} legs")
    if any(b <= a for a, b in zip(positions, positions[1:])):
        raise ShapeError(f"positions {positions} must be strictly increasing")
    if positions and not (0 <= positions[0] and positions[-1] < len(ambient)):
        raise ShapeError(f"positions {positions} outside {len(ambient)} legs")
    for p, s in zip(positions, X.domain):
        if ambient[p] != s:
            raise LegMismatch(f"leg {p} is {ambient[p]}, map expects {s}")
    out = list(ambient)
    for p, s in zip(positions, X.codomain):
        out[p] = s
    out = tuple(out)
    rest = [k for k in range(len(ambient)) if k not in positions]
    in_str = _strides([s.dim for s in ambient])
    out_str = _strides([s.dim for s in out])

    def offsets(legs, strides, where):
        dims = [legs[k].dim for k in where]
        return [sum(i * strides[k] for i, k in zip(idx, where))
                for idx in product(*(range(d) for d in dims))]

    row_part = offsets(out, out_str, positions)
    col_part = offsets(ambient, in_str, positions)
    rest_row = offsets(out, out_str, rest)
    rest_col = offsets(ambient, in_str, rest)
    rows: dict = {}
    for r, c, v in X.mat.items():
        rp, cp = row_part[r], col_part[c]
        for zr, zc in zip(rest_row, rest_col):
            rows.setdefault(rp + zr, {})[cp + zc] = v
    return LegMap(out, ambient, Mat(X.field, legs_dim(out), legs_dim(ambient), rows))


def slice_map(T: LegMap, out_leg: int, in_leg: int, i: int, j: int) -> LegMap:
    """Fix codomain index ``i`` on leg ``out_leg`` and domain index ``j`` on ``in_leg``."""
    if not (0 <= out_leg < len(T.codomain) and 0 <= in_leg < len(T.domain)):
        raise ShapeError("slice leg out of range")
    if not (0 <= i < T.codomain[out_leg].dim and 0 <= j < T.domain[in_leg].dim):
        raise ShapeError("slice index out of range")
    cod = T.codomain[:out_leg] + T.codomain[out_leg + 1:]
    dom = T.domain[:in_leg] + T.domain[in_leg + 1:]
    cdims = [s.dim for s in T.codomain]
    ddims = [s.dim for s in T.domain]
    cs, ds = _strides(cdims), _strides(ddims)
    rcs, rds = _strides([s.dim for s in cod]), _strides([s.dim for s in dom])

    def split(idx, dims, strides, leg, rstrides):
        digits = [(idx // strides[k]) % dims[k] for k in range(len(dims))]
        fixed = digits.pop(leg)
        return fixed, sum(d * s for d, s in zip(digits, rstrides))

    entries = []
    for r, c, v in T.mat.items():
        fr, rr = split(r, cdims, cs, out_leg, rcs)
        if fr != i:
            continue
        fc, rc = split(c, ddims, ds, in_leg, rds)
        if fc == j:
            entries.append((rr, rc, v))
    return LegMap(cod, dom, Mat.from_entries(T.field, legs_dim(cod), legs_dim(dom), entries))


def merge_legs(X: LegMap, codomain_groups=None, domain_groups=None) -> LegMap:
    """Fuse runs of adjacent legs into single spaces; the matrix is unchanged.

    Each group is a ``(start, stop, label)`` triple over leg positions.
    """
    def fuse(legs, groups):
        if not groups:
            return legs
        out = []
        k = 0
        for start, stop, label in sorted(groups):
            if start < k or stop <= start or stop > len(legs):
                raise ShapeError(f"bad leg group {(start, stop)}")
            out.extend(legs[k:start])
            out.append(Space(label, legs_dim(legs[start:stop])))
            k = stop
        out.extend(legs[k:])
        return tuple(out)

    return X.relabel(fuse(X.codomain, codomain_groups), fuse(X.domain, domain_groups))


def to_tensor(X: LegMap) -> tuple[dict, list[int]]:
    """Rewrite an operator on ``C1(x)..(x)Cn <- D1(x)..(x)Dn`` as a vector in
    ``Hom(D1,C1)(x)..(x)Hom(Dn,Cn)``.

    Returns the sparse vector and the dimensions of the Hom factors; each factor
    is flattened row-major (codomain index major).
    """
    n = len(X.codomain)
    if len(X.domain) != n:
        raise ShapeError("operator must have as many domain legs as codomain legs")
    cdims = [s.dim for s in X.codomain]
    ddims = [s.dim for s in X.domain]
    cs, ds = _strides(cdims), _strides(ddims)
    fdims = [c * d for c, d in zip(cdims, ddims)]
    fs = _strides(fdims)
    vec = {}
    for r, c, v in X.mat.items():
        idx = 0
        for k in range(n):
            a = (r // cs[k]) % cdims[k]
            b = (c // ds[k]) % ddims[k]
            idx += (a * ddims[k] + b) * fs[k]
        vec[idx] = v
    return vec, fdims


def from_tensor(field, vec: dict, codomain, domain) -> LegMap:
    """Inverse of :func:`to_tensor`."""
    codomain, domain = tuple(codomain), tuple(domain)
    n = len(codomain)
    cdims = [s.dim for s in codomain]
    ddims = [s.dim for s in domain]
    cs, ds = _strides(cdims), _strides(ddims)
    fdims = [c * d for c, d in zip(cdims, ddims)]
    fs = _strides(fdims)
    entries = []
    for idx, v in vec.items():
        r = c = 0
        for k in range(n):
            f = (idx // fs[k]) % fdims[k]
            a, b = divmod(f, ddims[k])
            r += a * cs[k]
            c += b * ds[k]
        entries.append((r, c, v))
    return LegMap(codomain, domain, Mat.from_entries(field, legs_dim(codomain), legs_dim(domain), entries))


def map_to_vec(X: LegMap) -> dict:
    """Single-leg-pair operator flattened row-major (as an element of Hom(D, C))."""
    n = X.mat.ncols
    return {i * n + j: v for i, j, v in X.mat.items()}


def vec_to_map(field, vec: dict, codomain, domain) -> LegMap:
    codomain, domain = tuple(codomain), tuple(domain)
    n = legs_dim(domain)
    entries = [(idx // n, idx % n, v) for idx, v in vec.items()]
    return LegMap(codomain, domain, Mat.from_entries(field, legs_dim(codomain), n, entries))


def vector_map(field, vec: dict, legs) -> LegMap:
    """Column ``k -> legs`` holding ``vec``."""
    legs = tuple(legs)
    return LegMap(legs, (), Mat.from_entries(field, legs_dim(legs), 1, [(i, 0, v) for i, v in vec.items()]))


def image_basis(maps) -> list[LegMap]:
    """RREF basis of the span of ``maps``, all of the same type, as maps of that type."""
    maps = list(maps)
    if not maps:
        return []
    first = maps[0]
    for m in maps[1:]:
        if m.codomain != first.codomain or m.domain != first.domain:
            raise LegMismatch("image_basis needs maps of one type")
    basis, _ = rref(first.field, [map_to_vec(m) for m in maps], first.mat.nrows * first.mat.ncols)
    return [vec_to_map(first.field, b, first.codomain, first.domain) for b in basis]
