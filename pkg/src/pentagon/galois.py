"""Module coalgebras, paired comodule data, and the MPE solutions they produce."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotGalois, ShapeError, Singular
from .field import Field
from .groups import Group, check_right_action
from .hopf import (HopfAlgebra, HopfModule, K, check_hopf_module,
                   group_algebra, phi_map, require, trivial_module)
from .pentagon import MPESolution, mpe_solution
from .report import CheckReport
from .tensor import LegMap, Space, kron, permute_legs


@dataclass(frozen=True, eq=False)
class ModuleCoalgebra:
    hopf: HopfAlgebra
    L: Space
    delta_L: LegMap   # L -> L (x) L
    counit_L: LegMap  # L -> k
    mu_L: LegMap      # L (x) H -> L

    @property
    def field(self) -> Field:
        return self.hopf.field


@dataclass(frozen=True, eq=False)
class PairedComoduleData:
    mc: ModuleCoalgebra
    hm: HopfModule
    V: Space
    delta_V: LegMap            # V -> V (x) L
    pi: LegMap                 # L (x) M -> V
    nu: LegMap | None = None   # L (x) V -> M

    @property
    def field(self) -> Field:
        return self.mc.field


def _expect(label, m, codomain, domain):
    if m.codomain != tuple(codomain) or m.domain != tuple(domain):
        raise ShapeError(f"{label} has type {m!r}, expected {domain} -> {codomain}")


def check_module_coalgebra(mc: ModuleCoalgebra) -> CheckReport:
    h, L, field = mc.hopf, mc.L, mc.field
    H = h.H
    _expect("delta_L", mc.delta_L, (L, L), (L,))
    _expect("counit_L", mc.counit_L, K, (L,))
    _expect("mu_L", mc.mu_L, (L,), (L, H))
    IL, IH = LegMap.identity(field, (L,)), h.ident()
    d, e, mu = mc.delta_L, mc.counit_L, mc.mu_L
    rep = CheckReport("module coalgebra")
    rep.compare("coassociativity", kron(d, IL) @ d, kron(IL, d) @ d)
    rep.compare("left counit", kron(e, IL) @ d, IL)
    rep.compare("right counit", kron(IL, e) @ d, IL)
    rep.compare("action associativity", mu @ kron(mu, IH), mu @ kron(IL, h.mu))
    rep.compare("action unit", mu @ kron(IL, h.unit), IL)
    t23 = permute_legs((0, 2, 1, 3), (L, L, H, H), field)
    rep.compare("delta_L mu_L = (mu_L (x) mu_L) t23 (delta_L (x) delta_H)",
                d @ mu, kron(mu, mu) @ t23 @ kron(d, h.delta))
    rep.compare("counit_L mu_L = counit_L (x) counit_H", e @ mu, kron(e, h.counit))
    return rep


def _same_hopf(a: HopfAlgebra, b: HopfAlgebra) -> bool:
    return a is b or (a.H == b.H and a.mu == b.mu and a.unit == b.unit and a.delta == b.delta
                      and a.counit == b.counit and a.antipode == b.antipode)


def check_paired_data(pd: PairedComoduleData) -> CheckReport:
    mc, hm, V, field = pd.mc, pd.hm, pd.V, pd.field
    if not _same_hopf(mc.hopf, hm.hopf):
        raise ShapeError("module coalgebra and Hopf module are over different Hopf algebras")
    L, M, H = mc.L, hm.M, mc.hopf.H
    _expect("delta_V", pd.delta_V, (V, L), (V,))
    _expect("pi", pd.pi, (V,), (L, M))
    IL, IV, IM, IH = (LegMap.identity(field, (s,)) for s in (L, V, M, H))
    dV, pi = pd.delta_V, pd.pi
    rep = CheckReport("paired comodule data")
    rep.compare("comodule coassociativity", kron(dV, IL) @ dV, kron(IV, mc.delta_L) @ dV)
    rep.compare("comodule counit", kron(IV, mc.counit_L) @ dV, IV)
    rep.compare("pi (mu_L (x) I) = pi (I (x) mu_M)", pi @ kron(mc.mu_L, IM), pi @ kron(IL, hm.action))
    t23 = permute_legs((0, 2, 1, 3), (L, L, M, H), field)
    rep.compare("delta_V pi = (pi (x) mu_L) t23 (delta_L (x) delta_M)",
                dV @ pi, kron(pi, mc.mu_L) @ t23 @ kron(mc.delta_L, hm.coaction))
    if pd.nu is not None:
        _expect("nu", pd.nu, (M,), (L, V))
        nu = pd.nu
        rep.compare("nu (I (x) pi)(delta_L (x) I) = counit_L (x) I",
                    nu @ kron(IL, pi) @ kron(mc.delta_L, IM), kron(mc.counit_L, IM))
        rep.compare("pi (I (x) nu)(delta_L (x) I) = counit_L (x) I",
                    pi @ kron(IL, nu) @ kron(mc.delta_L, IV), kron(mc.counit_L, IV))
    return rep


def build_FV(pd: PairedComoduleData) -> MPESolution:
    """``F_V = (I (x) pi)(delta_V (x) I)`` paired with the Hopf module's ``phi``."""
    require(check_paired_data(pd))
    require(check_hopf_module(pd.hm))
    field = pd.field
    V, M = pd.V, pd.hm.M
    IV, IM = LegMap.identity(field, (V,)), LegMap.identity(field, (M,))
    F = kron(IV, pd.pi) @ kron(pd.delta_V, IM)
    if pd.nu is not None:
        G = kron(IV, pd.nu) @ kron(pd.delta_V, IV)
        rep = CheckReport("F_V inverse from nu")
        rep.compare("G F_V = I", G @ F, LegMap.identity(field, (V, M)))
        rep.compare("F_V G = I", F @ G, LegMap.identity(field, (V, V)))
        require(rep)
    elif not F.is_invertible():
        raise Singular("F_V is singular")
    return mpe_solution(F, phi_map(pd.hm))


def galois_map(mc: ModuleCoalgebra) -> LegMap:
    """``F_L = (I (x) mu_L)(delta_L (x) I): L (x) H -> L (x) L``."""
    IL, IH = LegMap.identity(mc.field, (mc.L,)), mc.hopf.ident()
    return kron(IL, mc.mu_L) @ kron(mc.delta_L, IH)


def galois_check(mc: ModuleCoalgebra) -> CheckReport:
    require(check_module_coalgebra(mc))
    F = galois_map(mc)
    rep = CheckReport("galois")
    if F.mat.nrows != F.mat.ncols:
        rep.fail("F_L square (dim L = dim H)", 1)
        return rep
    rank = F.mat.rank()
    if rank != F.mat.nrows:
        rep.fail("F_L invertible (rank deficiency)", F.mat.nrows - rank)
    return rep


def galois_mpe(mc: ModuleCoalgebra) -> MPESolution:
    """``(F_L, phi_H)`` for a Galois module coalgebra."""
    rep = galois_check(mc)
    if not rep.passed:
        raise NotGalois(str(rep))
    return mpe_solution(galois_map(mc), phi_map(trivial_module(mc.hopf)))


def galois_paired_data(mc: ModuleCoalgebra, with_nu: bool = True) -> PairedComoduleData:
    """``V = L``, ``M = H``, ``pi = mu_L``, ``delta_V = delta_L``;
    ``nu = (counit_L (x) I) F_L^-1`` when requested (needs ``mc`` Galois)."""
    hm = trivial_module(mc.hopf)
    nu = None
    if with_nu:
        rep = galois_check(mc)
        if not rep.passed:
            raise NotGalois(str(rep))
        nu = kron(mc.counit_L, mc.hopf.ident()) @ galois_map(mc).inverse()
    return PairedComoduleData(mc, hm, mc.L, mc.delta_L, mc.mu_L, nu)


def regular_module_coalgebra(h: HopfAlgebra) -> ModuleCoalgebra:
    """``L = H`` with its own coproduct, counit and right multiplication."""
    return ModuleCoalgebra(h, h.H, h.delta, h.counit, h.mu)


def group_set_coalgebra(G: Group, action, field: Field, hopf: HopfAlgebra | None = None) -> ModuleCoalgebra:
    """``k[X]`` with group-like points and the right action ``action[x][g] = x.g``."""
    if not check_right_action(G, action):
        raise ShapeError("not a right action")
    h = hopf or group_algebra(G, field)
    L = Space("L", len(action))
    delta = LegMap.from_function(field, (L, L), (L,), lambda c: [((c[0], c[0]), 1)])
    counit = LegMap.from_function(field, K, (L,), lambda c: [((), 1)])
    mu = LegMap.from_function(field, (L,), (L, h.H), lambda c: [((action[c[0]][c[1]],), 1)])
    return ModuleCoalgebra(h, L, delta, counit, mu)


def torsor(G: Group, field: Field) -> ModuleCoalgebra:
    """``G`` acting on itself by right multiplication."""
    return group_set_coalgebra(G, [[G.mul(x, g) for g in range(G.order)] for x in range(G.order)], field)

