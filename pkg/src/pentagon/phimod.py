"""Modules over a pentagon solution.

A module over ``(M, phi)`` is a space ``X`` with an invertible ``psi`` on
``M (x) X`` such that ``phi12 psi13 psi23 = psi23 phi12`` on ``M (x) M (x) X``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AxiomViolation, FieldMismatch, LegMismatch, ShapeError, Singular
from .hopf import HopfModule, phi_from_hopf_module
from .linalg import Mat
from .pentagon import PentagonSolution
from .report import CheckReport
from .tensor import LegMap, Space, embed_legs, kron, merge_legs


@dataclass(eq=False)
class PhiModule:
    base: PentagonSolution
    X: Space
    psi: LegMap
    report: CheckReport

    @property
    def field(self):
        return self.psi.field


def _check_shape(base: PentagonSolution, X: Space, psi: LegMap):
    legs = (base.M, X)
    if psi.codomain != legs or psi.domain != legs:
        raise LegMismatch(f"psi must act on {base.M} (x) {X}")
    if psi.field != base.field:
        raise FieldMismatch("psi and phi live over different fields")


def check_phi_module(base: PentagonSolution, X: Space, psi: LegMap) -> CheckReport:
    _check_shape(base, X, psi)
    if not psi.is_invertible():
        raise Singular("psi is not invertible")
    M = base.M
    amb = (M, M, X)
    p12 = embed_legs(base.phi, (0, 1), amb)
    s13 = embed_legs(psi, (0, 2), amb)
    s23 = embed_legs(psi, (1, 2), amb)
    rep = CheckReport("phi-module")
    rep.compare("phi12 psi13 psi23 = psi23 phi12", p12 @ s13 @ s23, s23 @ p12)
    return rep


def phi_module(base: PentagonSolution, X: Space, psi: LegMap) -> PhiModule:
    rep = check_phi_module(base, X, psi)
    if not rep.passed:
        raise AxiomViolation(rep)
    return PhiModule(base, X, psi, rep)


def check_phi_morphism(a: PhiModule, b: PhiModule, f: LegMap) -> CheckReport:
    """``psi' (I (x) f) = (I (x) f) psi`` for ``f: X -> X'``."""
    if a.base.M != b.base.M or a.base.phi != b.base.phi:
        raise ShapeError("modules over different pentagon solutions")
    if f.domain != (a.X,) or f.codomain != (b.X,):
        raise LegMismatch(f"f must map {a.X} to {b.X}")
    If = kron(LegMap.identity(a.field, (a.base.M,)), f)
    rep = CheckReport("phi-module morphism")
    rep.compare("psi' (I (x) f) = (I (x) f) psi", b.psi @ If, If @ a.psi)
    return rep


def tensor_phi_modules(a: PhiModule, b: PhiModule) -> PhiModule:
    """``(X (x) X', psi12 psi'13)`` with ``X (x) X'`` fused into one space."""
    if a.base.M != b.base.M or a.base.phi != b.base.phi:
        raise ShapeError("modules over different pentagon solutions")
    M = a.base.M
    amb = (M, a.X, b.X)
    prod = embed_legs(a.psi, (0, 1), amb) @ embed_legs(b.psi, (0, 2), amb)
    XX = Space(f"{a.X.label}*{b.X.label}", a.X.dim * b.X.dim)
    groups = [(0, 1, M.label), (1, 3, XX.label)]
    psi = merge_legs(prod, groups, groups).relabel(codomain=(M, XX), domain=(M, XX))
    return phi_module(a.base, XX, psi)


def self_module(base: PentagonSolution) -> PhiModule:
    """``(M, phi)`` over itself."""
    return phi_module(base, base.M, base.phi)


def identity_module(base: PentagonSolution, X: Space) -> PhiModule:
    return phi_module(base, X, LegMap.identity(base.field, (base.M, X)))


def check_action(hm: HopfModule, X: Space, rho_X: LegMap) -> CheckReport:
    h = hm.hopf
    IX = LegMap.identity(h.field, (X,))
    IH = h.ident()
    rep = CheckReport("H-module action")
    if rho_X.codomain != (X,) or rho_X.domain != (h.H, X):
        raise LegMismatch(f"action must map {h.H} (x) {X} to {X}")
    rep.compare("rho (mu (x) I) = rho (I (x) rho)", rho_X @ kron(h.mu, IX), rho_X @ kron(IH, rho_X))
    rep.compare("rho (u (x) I) = I", rho_X @ kron(h.unit, IX), IX)
    return rep


def module_from_hopf(hm: HopfModule, X: Space, rho_X: LegMap) -> PhiModule:
    """``psi(m (x) x) = m_(0) (x) m_(1) x`` over the pentagon solution of ``hm``."""
    rep = check_action(hm, X, rho_X)
    if not rep.passed:
        raise AxiomViolation(rep)
    field = hm.field
    M = hm.M
    psi = kron(LegMap.identity(field, (M,)), rho_X) @ kron(hm.coaction, LegMap.identity(field, (X,)))
    return phi_module(phi_from_hopf_module(hm), X, psi)


def counit_action(hm: HopfModule, X: Space | None = None) -> tuple[Space, LegMap]:
    """The trivial representation: ``h x = counit(h) x``."""
    X = X or Space("triv", 1)
    h = hm.hopf
    return X, kron(h.counit, LegMap.identity(h.field, (X,))).relabel(codomain=(X,), domain=(h.H, X))


def regular_action(hm: HopfModule) -> tuple[Space, LegMap]:
    h = hm.hopf
    return h.H, h.mu


def character_action(hm: HopfModule, chi: list, label: str = "chi") -> tuple[Space, LegMap]:
    """One-dimensional representation with ``b_k x = chi[k] x`` on the basis of ``H``."""
    h = hm.hopf
    X = Space(label, 1)
    mat = Mat.from_entries(h.field, 1, h.dim, [(0, k, h.field.reduce(c)) for k, c in enumerate(chi)])
    return X, LegMap((X,), (h.H, X), mat)
