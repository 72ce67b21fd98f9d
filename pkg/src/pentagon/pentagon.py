"""Pentagon and modified pentagon equations, and coproducts on End(V).

A pentagon solution is an invertible ``phi`` on ``M (x) M`` with
``phi12 phi13 phi23 = phi23 phi12``. A modified-pentagon (MPE) solution is a
pair ``F: V (x) M -> V (x) V``, ``phi`` with ``F12 F13 phi23 = F23 F12``; such an
``F`` is the same thing as a coassociative coproduct ``x -> F (x (x) 1) F^-1`` on
``End(V)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (AxiomViolation, EvaluationSingular, LegMismatch, NotCoassociative,
                     NotCongruent, NotUnitalHom, ShapeError, Singular)
from .linalg import Mat, kernel_basis
from .report import CheckReport
from .tensor import (LegMap, Space, embed_legs, from_tensor, kron, merge_legs,
                     permute_legs, slice_map, to_tensor)


@dataclass(frozen=True, eq=False)
class PentagonSolution:
    M: Space
    phi: LegMap
    report: CheckReport

    @property
    def verified(self) -> bool:
        return self.report.passed

    @property
    def field(self):
        return self.phi.field


@dataclass(frozen=True, eq=False)
class MPESolution:
    V: Space
    M: Space
    F: LegMap
    phi: LegMap
    report: CheckReport

    @property
    def verified(self) -> bool:
        return self.report.passed

    @property
    def field(self):
        return self.F.field


@dataclass(frozen=True, eq=False)
class CoproductMap:
    """A linear map ``End(V) -> End(V) (x) End(V)``; ``End(V)`` is flattened row-major."""

    V: Space
    delta: LegMap

    @property
    def field(self):
        return self.delta.field


def _square_space(phi: LegMap) -> Space:
    if len(phi.domain) != 2 or phi.domain != phi.codomain or phi.domain[0] != phi.domain[1]:
        raise ShapeError(f"{phi!r} is not an operator on M (x) M")
    return phi.domain[0]


def _mpe_spaces(F: LegMap) -> tuple[Space, Space]:
    if len(F.domain) != 2 or len(F.codomain) != 2:
        raise ShapeError(f"{F!r} is not a map V (x) M -> V (x) V")
    V, M = F.domain
    if F.codomain != (V, V):
        raise LegMismatch(f"{F!r} must map {V} (x) {M} to {V} (x) {V}")
    return V, M


# checks

def check_pentagon(phi: LegMap) -> CheckReport:
    M = _square_space(phi)
    rep = CheckReport("pentagon")
    rep.require("invertible", phi.is_invertible())
    amb = (M, M, M)
    p12 = embed_legs(phi, (0, 1), amb)
    p13 = embed_legs(phi, (0, 2), amb)
    p23 = embed_legs(phi, (1, 2), amb)
    rep.compare("phi12 phi13 phi23 = phi23 phi12", p12 @ p13 @ p23, p23 @ p12)
    return rep


def mpe_sides(F: LegMap, phi: LegMap) -> tuple[LegMap, LegMap]:
    """Both sides ``F12 F13 phi23`` and ``F23 F12`` as maps V(x)M(x)M -> V(x)V(x)V."""
    V, M = _mpe_spaces(F)
    if _square_space(phi) != M:
        raise LegMismatch(f"phi acts on {phi.domain[0]}, F expects {M}")
    vmm = (V, M, M)
    lhs = (embed_legs(F, (0, 1), (V, M, V)) @ embed_legs(F, (0, 2), vmm)
           @ embed_legs(phi, (1, 2), vmm))
    rhs = embed_legs(F, (1, 2), (V, V, M)) @ embed_legs(F, (0, 1), vmm)
    return lhs, rhs


def check_mpe(F: LegMap, phi: LegMap) -> CheckReport:
    lhs, rhs = mpe_sides(F, phi)
    rep = CheckReport("modified pentagon")
    rep.require("F invertible", F.is_invertible())
    rep.require("phi invertible", phi.is_invertible())
    rep.compare("F12 F13 phi23 = F23 F12", lhs, rhs)
    return rep


def pentagon_solution(phi: LegMap) -> PentagonSolution:
    """Wrap ``phi`` after verifying it; raises :class:`AxiomViolation` otherwise."""
    rep = check_pentagon(phi)
    if not rep.passed:
        raise AxiomViolation(rep)
    return PentagonSolution(phi.domain[0], phi, rep)


def mpe_solution(F: LegMap, phi: LegMap) -> MPESolution:
    rep = check_mpe(F, phi)
    if not rep.passed:
        raise AxiomViolation(rep)
    V, M = F.domain
    return MPESolution(V, M, F, phi, rep)


# extraction and coproducts

def congruence_defect(F: LegMap) -> LegMap:
    """``F13^-1 F12^-1 F23 F12`` on V (x) M (x) M."""
    V, M = _mpe_spaces(F)
    Finv = F.inverse()
    return (embed_legs(Finv, (0, 2), (V, M, V)) @ embed_legs(Finv, (0, 1), (V, V, V))
            @ embed_legs(F, (1, 2), (V, V, M)) @ embed_legs(F, (0, 1), (V, M, M)))


def extract_phi(F: LegMap) -> LegMap:
    """The unique ``phi`` making ``(F, phi)`` an MPE solution.

    Raises :class:`NotCongruent` when ``F13^-1 F12^-1 F23 F12`` is not of the
    form ``1 (x) phi``, and :class:`Singular` when ``F`` is not invertible.
    """
    V, M = _mpe_spaces(F)
    C = congruence_defect(F)
    phi = slice_map(C, 0, 0, 0, 0)
    if C != embed_legs(phi, (1, 2), (V, M, M)):
        raise NotCongruent("F12 F13 and F23 F12 differ by more than 1 (x) Aut(M (x) M)")
    return phi


def end_space(V: Space) -> Space:
    return Space(f"End({V.label})", V.dim * V.dim)


def matrix_unit(field, V: Space, i: int, j: int) -> LegMap:
    return LegMap((V,), (V,), Mat(field, V.dim, V.dim, {i: {j: 1}}))


def delta_F(F: LegMap) -> CoproductMap:
    """``x -> F (x (x) 1) F^-1`` on the matrix-unit basis, with no congruence check."""
    V, M = _mpe_spaces(F)
    field = F.field
    Finv = F.inverse()
    E = end_space(V)
    one_M = LegMap.identity(field, (M,))
    cols = []
    for i in range(V.dim):
        for j in range(V.dim):
            y = F @ kron(matrix_unit(field, V, i, j), one_M) @ Finv
            vec, _ = to_tensor(y)
            cols.append(vec)
    return CoproductMap(V, LegMap((E, E), (E,), Mat.from_columns(field, E.dim ** 2, cols)))


def coproduct_from_solution(F: LegMap) -> CoproductMap:
    extract_phi(F)
    cm = delta_F(F)
    rep = check_coproduct(cm)
    if not rep.passed:
        # cannot happen once extraction succeeded
        raise NotCoassociative(str(rep))
    return cm


def coproduct_operator(cm: CoproductMap, x_index: int) -> LegMap:
    """``delta(x)`` as an operator on V (x) V for the ``x_index``-th matrix unit."""
    V = cm.V
    return from_tensor(cm.field, cm.delta.column(x_index), (V, V), (V, V))


def check_coproduct(cm: CoproductMap) -> CheckReport:
    """Unital algebra homomorphism and coassociativity, on matrix units."""
    V, field = cm.V, cm.field
    n = V.dim
    E = end_space(V)
    if cm.delta.domain != (E,) or cm.delta.codomain != (E, E):
        raise ShapeError(f"{cm.delta!r} is not a map End(V) -> End(V) (x) End(V)")
    rep = CheckReport("coproduct")
    ops = [coproduct_operator(cm, k) for k in range(n * n)]
    ident = LegMap.identity(field, (V, V))
    total = ops[0]
    for k in range(1, n):
        total = total + ops[k * n + k]
    rep.compare("delta(1) = 1 (x) 1", total, ident)
    zero = LegMap.zeros(field, (V, V), (V, V))
    bad = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    prod_ = ops[i * n + j] @ ops[k * n + l]
                    want = ops[i * n + l] if j == k else zero
                    bad += prod_.mat.diff_count(want.mat)
    if bad:
        rep.fail("delta(xy) = delta(x) delta(y)", bad)
    idE = LegMap.identity(field, (E,))
    d = cm.delta
    rep.compare("(delta (x) I) delta = (I (x) delta) delta", kron(d, idE) @ d, kron(idE, d) @ d)
    return rep


def solution_from_coproduct(cm: CoproductMap) -> MPESolution:
    """Recover ``F`` from a coproduct via the intertwiner space ``Hom_End(V)(V, V (x) V)``."""
    rep = check_coproduct(cm)
    labels = {label for label, _ in rep.violations}
    if labels & {"delta(1) = 1 (x) 1", "delta(xy) = delta(x) delta(y)"}:
        raise NotUnitalHom(str(rep))
    if labels:
        raise NotCoassociative(str(rep))
    V, field = cm.V, cm.field
    n = V.dim
    # unknown T[(a, b), c] at index (a*n + b)*n + c
    entries = []
    eq = 0
    for i in range(n):
        for j in range(n):
            D = coproduct_operator(cm, i * n + j).mat
            for ab in range(n * n):
                drow = D.rows.get(ab, {})
                for c in range(n):
                    for ab2, v in drow.items():
                        entries.append((eq, ab2 * n + c, v))
                    if c == j:
                        entries.append((eq, ab * n + i, -1))
                    eq += 1
    system = Mat.from_entries(field, eq, n ** 3, entries)
    basis = kernel_basis(system)
    if not basis:
        raise EvaluationSingular("no intertwiners V -> V (x) V")
    M = Space("M", len(basis))
    # F[(a, b), (v, k)] = T_k[(a, b), v]
    ent = []
    for k, T in enumerate(basis):
        for idx, val in T.items():
            ab, v = divmod(idx, n)
            ent.append((ab, v * M.dim + k, val))
    if n * M.dim != n * n:
        raise EvaluationSingular(f"evaluation V (x) M has dimension {n * M.dim}, not {n * n}")
    F = LegMap((V, V), (V, M), Mat.from_entries(field, n * n, n * M.dim, ent))
    if not F.is_invertible():
        raise EvaluationSingular("evaluation map V (x) M -> V (x) V is singular")
    if delta_F(F).delta != cm.delta:
        raise EvaluationSingular("evaluation map does not reproduce the coproduct")
    return mpe_solution(F, extract_phi(F))


# combinators

def flip_solution(s: MPESolution) -> MPESolution:
    """``(t F, t phi^-1 t)``."""
    field = s.field
    t_V = permute_legs((1, 0), (s.V, s.V), field)
    t_M = permute_legs((1, 0), (s.M, s.M), field)
    return mpe_solution(t_V @ s.F, t_M @ s.phi.inverse() @ t_M)


def op_solution(ps: PentagonSolution) -> MPESolution:
    """``(phi^-1 t, phi)`` with V = M."""
    t = permute_legs((1, 0), (ps.M, ps.M), ps.field)
    return mpe_solution(ps.phi.inverse() @ t, ps.phi)


def diagonal_pair(ps: PentagonSolution) -> MPESolution:
    """``(phi, phi)``, an MPE solution exactly when ``phi`` is a pentagon solution."""
    return mpe_solution(ps.phi, ps.phi)


def interleave(A: LegMap, B: LegMap, fuse: bool = True) -> LegMap:
    """``t23 (A (x) B) t23`` for two-leg maps; with ``fuse`` the leg pairs are merged."""
    field = A.field
    AB = kron(A, B)
    a0, a1 = A.domain
    b0, b1 = B.domain
    right = permute_legs((0, 2, 1, 3), (a0, b0, a1, b1), field)
    left = permute_legs((0, 2, 1, 3), AB.codomain, field)
    out = left @ AB @ right
    if not fuse:
        return out
    c = out.codomain
    return merge_legs(out,
                      [(0, 2, f"{c[0].label}*{c[1].label}"), (2, 4, f"{c[2].label}*{c[3].label}")],
                      [(0, 2, f"{a0.label}*{b0.label}"), (2, 4, f"{a1.label}*{b1.label}")])


def tensor_solutions(s: MPESolution, s2: MPESolution) -> MPESolution:
    if s.field != s2.field:
        raise ShapeError("solutions over different fields")
    return mpe_solution(interleave(s.F, s2.F), interleave(s.phi, s2.phi))


def multiplicity(ps: PentagonSolution, d: int) -> PentagonSolution:
    """``t23 (phi (x) I_{W(x)W}) t23`` on ``M (x) W`` with ``dim W = d``."""
    if not isinstance(d, int) or d < 1:
        raise ShapeError(f"multiplicity must be a positive integer, got {d!r}")
    if d == 1:
        return ps
    W = Space(f"k{d}", d)
    ident = LegMap.identity(ps.field, (W, W))
    return pentagon_solution(interleave(ps.phi, ident))


def transport(s: MPESolution, f: LegMap, g: LegMap) -> MPESolution:
    """Move ``s`` along isomorphisms ``f: V -> V'`` and ``g: M -> M'``."""
    F2 = kron(f, f) @ s.F @ kron(f, g).inverse()
    phi2 = kron(g, g) @ s.phi @ kron(g, g).inverse()
    return mpe_solution(F2, phi2)


def transport_pentagon(ps: PentagonSolution, g: LegMap) -> PentagonSolution:
    gg = kron(g, g)
    return pentagon_solution(gg @ ps.phi @ gg.inverse())


def check_equivalence(s: MPESolution, s2: MPESolution, f: LegMap, g: LegMap) -> CheckReport:
    """Verify ``(f (x) f) F = F' (f (x) g)`` and ``(g (x) g) phi = phi' (g (x) g)``."""
    if not f.is_invertible():
        raise Singular("f is not invertible")
    if not g.is_invertible():
        raise Singular("g is not invertible")
    rep = CheckReport("equivalence")
    rep.compare("(f (x) f) F = F' (f (x) g)", kron(f, f) @ s.F, s2.F @ kron(f, g))
    rep.compare("(g (x) g) phi = phi' (g (x) g)", kron(g, g) @ s.phi, s2.phi @ kron(g, g))
    return rep
