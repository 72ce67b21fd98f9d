"""Hopf algebras and Hopf modules as structure tensors.

Scalars ``k`` are the empty leg list, so the unit is a map ``() -> (H,)`` and the
counit a map ``(H,) -> ()``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (AntipodeNotInvertible, AxiomViolation, CharTwoUnsupported,
                     DimensionMismatch, ShapeError, Singular)
from .field import Field
from .groups import Group
from .linalg import Mat, kernel_basis
from .pentagon import PentagonSolution, interleave, pentagon_solution
from .report import CheckReport
from .tensor import LegMap, Space, kron, permute_legs

K = ()


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    H: Space
    mu: LegMap
    unit: LegMap
    delta: LegMap
    counit: LegMap
    antipode: LegMap
    name: str = "H"

    @property
    def field(self) -> Field:
        return self.mu.field

    @property
    def dim(self) -> int:
        return self.H.dim

    def ident(self) -> LegMap:
        return LegMap.identity(self.field, (self.H,))


@dataclass(frozen=True, eq=False)
class HopfModule:
    hopf: HopfAlgebra
    M: Space
    action: LegMap    # H (x) M -> M
    coaction: LegMap  # M -> M (x) H

    @property
    def field(self) -> Field:
        return self.hopf.field


def _expect(label, m: LegMap, codomain, domain):
    if m.codomain != tuple(codomain) or m.domain != tuple(domain):
        raise ShapeError(f"{label} has type {m!r}, expected {domain} -> {codomain}")


def check_hopf_axioms(h: HopfAlgebra) -> CheckReport:
    H = h.H
    _expect("mu", h.mu, (H,), (H, H))
    _expect("unit", h.unit, (H,), K)
    _expect("delta", h.delta, (H, H), (H,))
    _expect("counit", h.counit, K, (H,))
    _expect("antipode", h.antipode, (H,), (H,))
    I = h.ident()
    mu, u, d, e, S = h.mu, h.unit, h.delta, h.counit, h.antipode
    rep = CheckReport(f"hopf axioms ({h.name})")
    rep.compare("associativity", mu @ kron(mu, I), mu @ kron(I, mu))
    rep.compare("left unit", mu @ kron(u, I), I)
    rep.compare("right unit", mu @ kron(I, u), I)
    rep.compare("coassociativity", kron(d, I) @ d, kron(I, d) @ d)
    rep.compare("left counit", kron(e, I) @ d, I)
    rep.compare("right counit", kron(I, e) @ d, I)
    t23 = permute_legs((0, 2, 1, 3), (H, H, H, H), h.field)
    rep.compare("delta mu = (mu (x) mu) t23 (delta (x) delta)", d @ mu, kron(mu, mu) @ t23 @ kron(d, d))
    rep.compare("delta(1) = 1 (x) 1", d @ u, kron(u, u))
    rep.compare("counit multiplicative", e @ mu, kron(e, e))
    rep.compare("counit(1) = 1", e @ u, LegMap.identity(h.field, K))
    rep.compare("mu (S (x) I) delta = u counit", mu @ kron(S, I) @ d, u @ e)
    rep.compare("mu (I (x) S) delta = u counit", mu @ kron(I, S) @ d, u @ e)
    return rep


def check_hopf_module(hm: HopfModule) -> CheckReport:
    h, M = hm.hopf, hm.M
    H = h.H
    _expect("action", hm.action, (M,), (H, M))
    _expect("coaction", hm.coaction, (M, H), (M,))
    field = hm.field
    IM, IH = LegMap.identity(field, (M,)), h.ident()
    act, co = hm.action, hm.coaction
    rep = CheckReport("hopf module")
    rep.compare("module associativity", act @ kron(h.mu, IM), act @ kron(IH, act))
    rep.compare("module unit", act @ kron(h.unit, IM), IM)
    rep.compare("comodule coassociativity", kron(co, IH) @ co, kron(IM, h.delta) @ co)
    rep.compare("comodule counit", kron(IM, h.counit) @ co, IM)
    t23 = permute_legs((0, 2, 1, 3), (H, H, M, H), field)
    rep.compare("H-linearity", co @ act, kron(act, h.mu) @ t23 @ kron(h.delta, co))
    return rep


def require(report: CheckReport) -> CheckReport:
    if not report.passed:
        raise AxiomViolation(report)
    return report


def phi_map(hm: HopfModule) -> LegMap:
    """``(I (x) action)(coaction (x) I)``, i.e. ``m (x) n -> m_(0) (x) m_(1) n``."""
    IM = LegMap.identity(hm.field, (hm.M,))
    return kron(IM, hm.action) @ kron(hm.coaction, IM)


def phi_from_hopf_module(hm: HopfModule) -> PentagonSolution:
    require(check_hopf_module(hm))
    return pentagon_solution(phi_map(hm))


def phi_inverse_via_antipode(hm: HopfModule) -> LegMap:
    """``m (x) n -> m_(0) (x) S(m_(1)) n``."""
    require(check_hopf_module(hm))
    IM = LegMap.identity(hm.field, (hm.M,))
    return kron(IM, hm.action) @ kron(IM, hm.hopf.antipode, IM) @ kron(hm.coaction, IM)


def coinvariants(hm: HopfModule) -> list[dict]:
    """RREF basis of ``{m : coaction(m) = m (x) 1}``."""
    IM = LegMap.identity(hm.field, (hm.M,))
    return kernel_basis((hm.coaction - kron(IM, hm.hopf.unit)).mat)


@dataclass(frozen=True, eq=False)
class FundamentalIso:
    theta: LegMap        # H (x) M_H -> M
    theta_inv: LegMap    # M -> H (x) M_H
    MH: Space
    basis: list
    report: CheckReport


def inclusion(field, basis, M: Space, label: str = "M_H") -> tuple[Space, LegMap, LegMap]:
    """Subspace spanned by an RREF ``basis``: its space, inclusion and pivot projection."""
    sub = Space(label, len(basis))
    J = LegMap((M,), (sub,), Mat.from_columns(field, M.dim, basis))
    pivots = [min(v) for v in basis]
    P = LegMap((sub,), (M,), Mat(field, sub.dim, M.dim, {k: {p: 1} for k, p in enumerate(pivots)}))
    return sub, J, P


def fundamental_iso(hm: HopfModule) -> FundamentalIso:
    require(check_hopf_module(hm))
    h, M, field = hm.hopf, hm.M, hm.field
    H = h.H
    basis = coinvariants(hm)
    if not basis or h.dim * len(basis) != M.dim:
        raise DimensionMismatch(f"dim H * dim M_H = {h.dim} * {len(basis)} != dim M = {M.dim}")
    try:
        Sinv = h.antipode.inverse()
    except Singular:
        raise AntipodeNotInvertible("antipode is not invertible") from None
    MH, J, P = inclusion(field, basis, M)
    IH, IM, IMH = h.ident(), LegMap.identity(field, (M,)), LegMap.identity(field, (MH,))
    theta = hm.action @ kron(IH, J)
    co2 = kron(hm.coaction, IH) @ hm.coaction                   # m0 m1 m2
    rev = permute_legs((2, 1, 0), (M, H, H), field)             # m2 m1 m0
    theta_inv = kron(IH, P @ hm.action @ kron(Sinv, IM)) @ rev @ co2
    rep = CheckReport("fundamental isomorphism")
    rep.compare("theta theta^-1 = I", theta @ theta_inv, IM)
    rep.compare("theta^-1 theta = I", theta_inv @ theta, LegMap.identity(field, (H, MH)))
    rep.compare("theta H-linear", theta @ kron(h.mu, IMH), hm.action @ kron(IH, theta))
    free_co = permute_legs((0, 2, 1), (H, H, MH), field) @ kron(h.delta, IMH)
    rep.compare("theta H-colinear", hm.coaction @ theta, kron(theta, IH) @ free_co)
    return FundamentalIso(theta, theta_inv, MH, basis, rep)


def check_factorization(hm: HopfModule, iso: FundamentalIso | None = None) -> CheckReport:
    """``phi_M (theta (x) theta) = (theta (x) theta) t23 (phi_H (x) I) t23``."""
    if iso is None:
        iso = fundamental_iso(hm)
    field = hm.field
    phi_M = phi_map(hm)
    phi_H = phi_map(trivial_module(hm.hopf))
    rhs_core = interleave(phi_H, LegMap.identity(field, (iso.MH, iso.MH)), fuse=False)
    tt = kron(iso.theta, iso.theta)
    rep = CheckReport("phi_M ~ phi_H (x) M_H")
    rep.compare("phi_M (theta (x) theta) = (theta (x) theta) t23 (phi_H (x) I) t23",
                phi_M @ tt, tt @ rhs_core)
    return rep


# builtin library

def group_algebra(G: Group, field: Field) -> HopfAlgebra:
    n = G.order
    H = Space("H", n)
    e = G.identity
    mu = LegMap.from_function(field, (H,), (H, H), lambda c: [((G.mul(*c),), 1)])
    unit = LegMap.from_function(field, (H,), K, lambda c: [((e,), 1)])
    delta = LegMap.from_function(field, (H, H), (H,), lambda c: [((c[0], c[0]), 1)])
    counit = LegMap.from_function(field, K, (H,), lambda c: [((), 1)])
    S = LegMap.from_function(field, (H,), (H,), lambda c: [((G.inverse[c[0]],), 1)])
    return HopfAlgebra(H, mu, unit, delta, counit, S, f"k[{G.name}]")


def dual_group_algebra(G: Group, field: Field) -> HopfAlgebra:
    """Functions on ``G``: basis of point indicators, pointwise product."""
    n = G.order
    H = Space("H", n)
    e = G.identity
    mu = LegMap.from_function(field, (H,), (H, H),
                              lambda c: [((c[0],), 1)] if c[0] == c[1] else [])
    unit = LegMap.from_function(field, (H,), K, lambda c: [((g,), 1) for g in range(n)])
    delta = LegMap.from_function(
        field, (H, H), (H,),
        lambda c: [((a, b), 1) for a in range(n) for b in range(n) if G.mul(a, b) == c[0]])
    counit = LegMap.from_function(field, K, (H,), lambda c: [((), 1)] if c[0] == e else [])
    S = LegMap.from_function(field, (H,), (H,), lambda c: [((G.inverse[c[0]],), 1)])
    return HopfAlgebra(H, mu, unit, delta, counit, S, f"k^{G.name}")


def sweedler4(field: Field) -> HopfAlgebra:
    """Basis ``1, g, x, gx`` (index ``2a + b`` for ``g^a x^b``): g^2 = 1, x^2 = 0, xg = -gx,
    delta g = g (x) g, delta x = x (x) 1 + g (x) x, S g = g, S x = -gx."""
    if field.char == 2:
        raise CharTwoUnsupported("Sweedler's algebra needs characteristic != 2")
    H = Space("H", 4)

    def idx(a, b):
        return 2 * (a % 2) + b

    def mul(c):
        (a1, b1), (a2, b2) = divmod(c[0], 2), divmod(c[1], 2)
        if b1 + b2 > 1:
            return []
        sign = -1 if b1 * a2 else 1
        return [((idx(a1 + a2, b1 + b2),), sign)]

    def comul(c):
        a, b = divmod(c[0], 2)
        if b == 0:
            return [((idx(a, 0), idx(a, 0)), 1)]
        return [((idx(a, 1), idx(a, 0)), 1), ((idx(a + 1, 0), idx(a, 1)), 1)]

    def anti(c):
        a, b = divmod(c[0], 2)
        if b == 0:
            return [((idx(a, 0),), 1)]
        # S(x) = -gx, S(gx) = x
        return [((idx(1, 1),), -1)] if a == 0 else [((idx(0, 1),), 1)]

    mu = LegMap.from_function(field, (H,), (H, H), mul)
    unit = LegMap.from_function(field, (H,), K, lambda c: [((0,), 1)])
    delta = LegMap.from_function(field, (H, H), (H,), comul)
    counit = LegMap.from_function(field, K, (H,), lambda c: [((), 1)] if c[0] % 2 == 0 else [])
    S = LegMap.from_function(field, (H,), (H,), anti)
    return HopfAlgebra(H, mu, unit, delta, counit, S, f"Sweedler/{field}")


def trivial_module(h: HopfAlgebra) -> HopfModule:
    """``H`` over itself: action by multiplication, coaction by the coproduct."""
    return HopfModule(h, h.H, h.mu, h.delta)


def multiplicity_module(h: HopfAlgebra, d: int, label: str | None = None) -> HopfModule:
    """``H (x) k^d`` fused into one space; ``H`` acts and coacts on the left factor."""
    if d < 1:
        raise ShapeError("multiplicity must be positive")
    if d == 1:
        return trivial_module(h)
    field = h.field
    H = h.H
    W = Space(label or f"k{d}", d)
    M = Space(f"{H.label}*{W.label}", H.dim * d)
    IW = LegMap.identity(field, (W,))
    action = kron(h.mu, IW).relabel(codomain=(M,), domain=(H, M))
    co = permute_legs((0, 2, 1), (H, H, W), field) @ kron(h.delta, IW)
    coaction = co.relabel(codomain=(M, H), domain=(M,))
    return HopfModule(h, M, action, coaction)


def builtin(name: str, field: Field, **params):
    """Named corpus entries; see the README for the list."""
    from . import groups as g

    if name == "group_algebra":
        return group_algebra(params["group"], field)
    if name == "dual_group_algebra":
        return dual_group_algebra(params["group"], field)
    if name == "sweedler4":
        return sweedler4(field)
    if name == "trivial_module":
        return trivial_module(params["hopf"])
    if name == "multiplicity_module":
        return multiplicity_module(params["hopf"], params["d"])
    if name.startswith("C") and name[1:].isdigit():
        return group_algebra(g.cyclic(int(name[1:])), field)
    if name == "S3":
        return group_algebra(g.symmetric3(), field)
    raise KeyError(name)

