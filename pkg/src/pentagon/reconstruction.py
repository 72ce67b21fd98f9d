"""Recovering Hopf-algebraic data from a bare pentagon or MPE solution.

For ``phi`` on ``M (x) M`` write ``T[(i, j), (a, b)] = phi[(i, a), (j, b)]``, the
reshuffle of ``phi`` into ``End(M) (x) End(M)``. Then ``lambda(w) = (w (x) I)(phi)``
is ``T^t w`` and ``rho(w) = (I (x) w)(phi)`` is ``T w``: the image of lambda is
the row space of ``T`` and the image of rho its column space. The reconstructed
Hopf algebra lives on the row space, in its RREF basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import CounitUnsolvable, NoSolution, SpanViolation
from .hopf import (HopfAlgebra, HopfModule, K, check_factorization, check_hopf_axioms,
                   check_hopf_module, coinvariants, fundamental_iso, phi_map)
from .linalg import (Echelon, Mat, dot, kernel_basis, kron_vec, minimal_polynomial,
                     poly_eval_matrix, solve_linear, solve_many, vec_combination)
from .pentagon import MPESolution, PentagonSolution
from .report import CheckReport
from .tensor import LegMap, Space, kron, map_to_vec, permute_legs, to_tensor, vec_to_map


class Span:
    """A subspace of ``k^ncols`` held in canonical RREF form."""

    def __init__(self, field, ncols, vectors=()):
        self.field = field
        self.ncols = ncols
        self._ech = Echelon(field, ncols)
        for v in vectors:
            self._ech.add(v)
        self.basis = self._ech.basis()
        self.pivots = self._ech.pivots

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: dict) -> bool:
        return self._ech.contains(v)

    def coords(self, v: dict, label: str = "span") -> list:
        c = self._ech.coords(v)
        if c is None:
            raise SpanViolation(f"{label}: vector outside the computed span")
        return c


def tensor_coords(vec: dict, A: Span, B: Span, label: str) -> list:
    """Coordinates of ``vec`` in the basis ``a_s (x) b_t`` (index ``s * dim B + t``)."""
    field = A.field
    nb = B.ncols
    coeffs = [field.reduce(vec.get(p * nb + q, 0)) for p in A.pivots for q in B.pivots]
    rebuilt: dict = {}
    for s, a in enumerate(A.basis):
        for t, b in enumerate(B.basis):
            c = coeffs[s * B.dim + t]
            if c:
                for j, x in kron_vec(a, b, nb, field).items():
                    rebuilt[j] = rebuilt.get(j, 0) + c * x
    rebuilt = {j: field.reduce(x) for j, x in rebuilt.items()}
    rebuilt = {j: x for j, x in rebuilt.items() if x}
    if rebuilt != {j: x for j, x in vec.items() if field.reduce(x)}:
        raise SpanViolation(f"{label}: element outside the tensor product of spans")
    return coeffs


def reshuffle(X: LegMap) -> Mat:
    """``X: C1 (x) C2 <- D1 (x) D2`` as ``T[(c1, d1), (c2, d2)]``."""
    vec, fdims = to_tensor(X)
    f2 = fdims[1]
    return Mat.from_entries(X.field, fdims[0], f2, [(i // f2, i % f2, v) for i, v in vec.items()])


def _as_map(field, vec, cod, dom) -> LegMap:
    return vec_to_map(field, vec, (cod,), (dom,))


# lambda / rho images

@dataclass(eq=False)
class LambdaRhoImages:
    T: Mat
    H: Span
    R: Span
    pairing_matrix: Mat
    report: CheckReport

    @property
    def H_basis(self):
        return self.H.basis

    @property
    def R_basis(self):
        return self.R.basis


def lambda_rho_images(ps: PentagonSolution) -> LambdaRhoImages:
    field, M = ps.field, ps.M
    n = M.dim
    T = reshuffle(ps.phi)
    H = Span(field, n * n, T.rows.values())
    R = Span(field, n * n, T.columns())
    rep = CheckReport("lambda/rho images")
    rep.require("dim im(lambda) = dim im(rho)", H.dim == R.dim)
    ident = map_to_vec(LegMap.identity(field, (M,)))
    rep.require("I in im(lambda)", H.contains(ident))
    rep.require("I in im(rho)", R.contains(ident))
    for label, S in (("im(lambda)", H), ("im(rho)", R)):
        mats = [_as_map(field, b, M, M) for b in S.basis]
        bad = sum(1 for x in mats for y in mats if not S.contains(map_to_vec(x @ y)))
        if bad:
            rep.fail(f"{label} closed under composition", bad)
    # (rho(w), lambda(w')) = w(lambda(w')) for any w with T w = rho(w)
    sols = solve_many(T, R.basis)
    entries = []
    for i, w in enumerate(sols):
        if w is None:
            rep.fail("rho basis preimage", 1)
            continue
        for j, h in enumerate(H.basis):
            entries.append((i, j, dot(field, w, h)))
    P = Mat.from_entries(field, R.dim, H.dim, entries)
    rep.require("pairing non-degenerate", P.is_invertible())
    return LambdaRhoImages(T, H, R, P, rep)


# pentagon reconstruction

@dataclass(eq=False)
class ReconstructionReport:
    H_basis: list
    R_basis: list
    hopf: HopfAlgebra
    module: HopfModule
    coaction: LegMap
    coinv_basis: list
    pairing_matrix: Mat
    certificates: list = dc_field(default_factory=list)
    theta: LegMap | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.certificates)

    @property
    def dim_H(self) -> int:
        return len(self.H_basis)

    @property
    def dim_coinv(self) -> int:
        return len(self.coinv_basis)


def coinvariants_phi(ps: PentagonSolution) -> list[dict]:
    """RREF basis of ``{m : phi(m (x) n) = m (x) n for all n}``."""
    field, n = ps.field, ps.M.dim
    D = ps.phi.mat - Mat.identity(field, n * n)
    # row ((x, y), b), column j  <-  D[(x, y), (j, b)]
    entries = [(r * n + c % n, c // n, v) for r, c, v in D.items()]
    return kernel_basis(Mat.from_entries(field, n * n * n, n, entries))


def reconstruct_hopf(ps: PentagonSolution) -> ReconstructionReport:
    field, M, phi = ps.field, ps.M, ps.phi
    n = M.dim
    lr = lambda_rho_images(ps)
    T, Hs_, Rs_ = lr.T, lr.H, lr.R
    r = Hs_.dim
    Hsp = Space("H", r)
    hmaps = [_as_map(field, b, M, M) for b in Hs_.basis]
    IM = LegMap.identity(field, (M,))
    phi_inv = phi.inverse()
    certs = [lr.report]

    # counit: restriction of any w with rho(w) = T w = I
    ident = map_to_vec(IM)
    try:
        w_eps = solve_linear(T, ident)
    except NoSolution:
        raise CounitUnsolvable("rho(w) = I has no solution") from None
    crep = CheckReport("counit well-defined")
    bad = sum(1 for z in kernel_basis(T) for h in Hs_.basis if dot(field, z, h))
    if bad:
        crep.fail("ker(rho) vanishes on im(lambda)", bad)
    certs.append(crep)

    # product and unit
    entries = []
    for i in range(r):
        for j in range(r):
            c = Hs_.coords(map_to_vec(hmaps[i] @ hmaps[j]), "product")
            entries.extend((k, i * r + j, v) for k, v in enumerate(c) if v)
    mu = LegMap((Hsp,), (Hsp, Hsp), Mat.from_entries(field, r, r * r, entries))
    u_c = Hs_.coords(map_to_vec(IM), "unit")
    unit = LegMap((Hsp,), K, Mat.from_entries(field, r, 1, [(k, 0, v) for k, v in enumerate(u_c)]))

    # coproduct  delta_l(h) = phi (h (x) 1) phi^-1
    entries = []
    for k, h in enumerate(hmaps):
        vec, _ = to_tensor(phi @ kron(h, IM) @ phi_inv)
        c = tensor_coords(vec, Hs_, Hs_, "delta_l")
        entries.extend((idx, k, v) for idx, v in enumerate(c) if v)
    delta = LegMap((Hsp, Hsp), (Hsp,), Mat.from_entries(field, r * r, r, entries))

    counit = LegMap(K, (Hsp,), Mat.from_entries(
        field, 1, r, [(0, k, dot(field, w_eps, h)) for k, h in enumerate(Hs_.basis)]))

    # antipode  S(lambda(w)) = (w (x) I)(phi^-1) = T_inv^t w
    T_inv = reshuffle(phi_inv)
    Tt = T.transpose()
    srep = CheckReport("antipode well-defined")
    bad = 0
    for z in kernel_basis(Tt):
        if vec_combination(field, [z.get(i, 0) for i in range(n * n)],
                           [T_inv.rows.get(i, {}) for i in range(n * n)]):
            bad += 1
    if bad:
        srep.fail("ker(lambda) inside ker(sigma)", bad)
    certs.append(srep)
    entries = []
    for k, w in enumerate(solve_many(Tt, Hs_.basis)):
        if w is None:
            raise SpanViolation("basis element of im(lambda) has no lambda-preimage")
        s_vec = vec_combination(field, list(w.values()), [T_inv.rows.get(i, {}) for i in w])
        c = Hs_.coords(s_vec, "antipode")
        entries.extend((j, k, v) for j, v in enumerate(c) if v)
    antipode = LegMap((Hsp,), (Hsp,), Mat.from_entries(field, r, r, entries))

    hopf = HopfAlgebra(Hsp, mu, unit, delta, counit, antipode, "im(lambda)")
    certs.append(check_hopf_axioms(hopf))

    # M as a Hopf module: action by evaluation, coaction r(m) = phi(m (x) I)
    entries = []
    for k, h in enumerate(hmaps):
        for a, b, v in h.mat.items():
            entries.append((a, k * n + b, v))
    action = LegMap((M,), (Hsp, M), Mat.from_entries(field, n, r * n, entries))
    entries = []
    for j in range(n):
        for i in range(n):
            c = Hs_.coords(T.row(i * n + j), "coaction")
            entries.extend((i * r + k, j, v) for k, v in enumerate(c) if v)
    coaction = LegMap((M, Hsp), (M,), Mat.from_entries(field, n * r, n, entries))
    module = HopfModule(hopf, M, action, coaction)
    mrep = check_hopf_module(module)
    mrep.name = "r_phi comodule, H-linear"
    certs.append(mrep)

    coinv = coinvariants_phi(ps)
    xrep = CheckReport("coinvariants cross-check")
    xrep.require("phi-fixed vectors = coaction coinvariants", coinv == coinvariants(module))
    certs.append(xrep)

    return ReconstructionReport(Hs_.basis, Rs_.basis, hopf, module, coaction, coinv,
                                lr.pairing_matrix, certs)


def roundtrip(ps: PentagonSolution, rec: ReconstructionReport | None = None) -> CheckReport:
    """``phi`` is ``phi_H (x) M_H`` transported along ``theta(h (x) m) = h m``."""
    if rec is None:
        rec = reconstruct_hopf(ps)
    rep = CheckReport("reconstruction round trip")
    for c in rec.certificates:
        rep.extend(c)
    iso = fundamental_iso(rec.module)
    rec.theta = iso.theta
    rep.extend(iso.report)
    rep.extend(check_factorization(rec.module, iso))
    rep.compare("(I (x) mu_M)(delta_M (x) I) = phi", phi_map(rec.module), ps.phi)
    return rep


@dataclass(eq=False)
class PolynomialCertificate:
    coeffs: list        # f, low degree first
    minimal: list       # minimal polynomial of phi, monic
    report: CheckReport


def counit_certificate(ps: PentagonSolution) -> PolynomialCertificate:
    """``f`` with ``f(0) = 0`` and ``f(phi) = I``, from the minimal polynomial of ``phi``."""
    field = ps.field
    P = ps.phi.mat
    m = minimal_polynomial(P)
    c0 = m[0]
    if not c0:
        raise ZeroDivisionError("zero constant term: phi is singular")
    inv = field.inv(c0)
    f = [0] + [field.reduce(-c * inv) for c in m[1:]]
    rep = CheckReport("Hamilton-Cayley certificate")
    rep.require("f(0) = 0", f[0] == 0)
    ident = Mat.identity(field, P.nrows)
    diff = poly_eval_matrix(f, P).diff_count(ident)
    if diff:
        rep.fail("f(phi) = I", diff)
    # each power of phi lies in im(rho) (x) im(lambda), hence so does I = f(phi)
    lr_H = Span(field, ps.M.dim ** 2, reshuffle(ps.phi).rows.values())
    lr_R = Span(field, ps.M.dim ** 2, reshuffle(ps.phi).columns())
    power = P
    bad = 0
    for _ in range(1, len(f)):
        Tk = reshuffle(LegMap(ps.phi.codomain, ps.phi.domain, power))
        bad += sum(1 for row in Tk.rows.values() if not lr_H.contains(row))
        bad += sum(1 for col in Tk.columns() if col and not lr_R.contains(col))
        power = power @ P
    if bad:
        rep.fail("phi^k in im(rho) (x) im(lambda)", bad)
    return PolynomialCertificate(f, m, rep)


# modified pentagon reconstruction

@dataclass(eq=False)
class MPEReconstructionReport:
    LF_basis: list
    RF_basis: list
    delta_FPhi: LegMap      # LF -> LF (x) LF in LF_basis coordinates
    coaction_V: LegMap      # V -> V (x) LF
    certificates: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.certificates)


def mpe_reconstruct(s: MPESolution, rec: ReconstructionReport | None = None) -> MPEReconstructionReport:
    field, V, M, F, phi = s.field, s.V, s.M, s.F, s.phi
    v, m = V.dim, M.dim
    if rec is None:
        from .pentagon import pentagon_solution
        rec = reconstruct_hopf(pentagon_solution(phi))
    hopf = rec.hopf
    Rphi = Span(field, m * m, rec.R_basis)
    TF = reshuffle(F)                 # rows (i, j) in End(V), cols (a, b) in Hom(M, V)
    LF = Span(field, v * m, TF.rows.values())
    RF = Span(field, v * v, TF.columns())
    q = LF.dim
    LFs = Space("LF", q)
    phi_inv = phi.inverse()
    F_inv = F.inverse()
    IM, IV = LegMap.identity(field, (M,)), LegMap.identity(field, (V,))
    certs = []

    def dFP(x: LegMap) -> LegMap:
        return F @ kron(x, IM) @ phi_inv

    lf_maps = [_as_map(field, b, V, M) for b in LF.basis]

    # (a) coproduct on im(lambda_F)
    arep = CheckReport("(a) Delta_{F,phi} coassociative on im(lambda_F)")
    entries = []
    try:
        for k, x in enumerate(lf_maps):
            vec, _ = to_tensor(dFP(x))
            c = tensor_coords(vec, LF, LF, "Delta_{F,phi}")
            entries.extend((idx, k, val) for idx, val in enumerate(c) if val)
    except SpanViolation:
        raise SpanViolation("(a) Delta_{F,phi} leaves im(lambda_F) (x) im(lambda_F)") from None
    delta = LegMap((LFs, LFs), (LFs,), Mat.from_entries(field, q * q, q, entries))
    ILF = LegMap.identity(field, (LFs,))
    arep.compare("(Delta (x) I) Delta = (I (x) Delta) Delta", kron(delta, ILF) @ delta,
                 kron(ILF, delta) @ delta)
    certs.append(arep)

    # (b) lambda_F is a coalgebra map: sum_k lambda_F(E_ik*) (x) lambda_F(E_kj*) = Delta lambda_F(E_ij*)
    brep = CheckReport("(b) lambda_F coalgebra map")
    bad = 0
    for i in range(v):
        for j in range(v):
            lhs: dict = {}
            for k in range(v):
                for idx, val in kron_vec(TF.row(i * v + k), TF.row(k * v + j), v * m, field).items():
                    lhs[idx] = lhs.get(idx, 0) + val
            lhs = {a: field.reduce(b) for a, b in lhs.items() if field.reduce(b)}
            rhs, _ = to_tensor(dFP(_as_map(field, TF.row(i * v + j), V, M)))
            bad += len(set(lhs) ^ set(rhs)) + sum(1 for a in lhs if a in rhs and lhs[a] != rhs[a])
    if bad:
        brep.fail("(lambda_F (x) lambda_F) Delta = Delta_{F,phi} lambda_F", bad)
    certs.append(brep)

    # (c) im(lambda_F) . im(lambda_phi) in im(lambda_F), compatible with the coproducts
    crep = CheckReport("(c) im(lambda_F) is an im(lambda_phi)-module coalgebra")
    h_maps = [_as_map(field, b, M, M) for b in rec.H_basis]
    r = len(h_maps)
    entries = []
    bad_span = bad_comp = 0
    for k, x in enumerate(lf_maps):
        dx = dFP(x)
        for t, y in enumerate(h_maps):
            xy = x @ y
            c = LF.coords(map_to_vec(xy), "(c)") if LF.contains(map_to_vec(xy)) else None
            if c is None:
                bad_span += 1
                continue
            entries.extend((j, k * r + t, val) for j, val in enumerate(c) if val)
            dy = phi @ kron(y, IM) @ phi_inv
            bad_comp += dFP(xy).mat.diff_count((dx @ dy).mat)
    if bad_span:
        crep.fail("x y in im(lambda_F)", bad_span)
    if bad_comp:
        crep.fail("Delta_{F,phi}(xy) = Delta_{F,phi}(x) Delta_phi(y)", bad_comp)
    certs.append(crep)
    if bad_span:
        raise SpanViolation(str(crep))
    right_mul = LegMap((LFs,), (LFs, hopf.H), Mat.from_entries(field, q, q * r, entries))

    # (d) z -> F^-1 (1 (x) z) F maps im(rho_F) into im(rho_F) (x) im(rho_phi)
    drep = CheckReport("(d) im(rho_F) is an im(lambda_phi)-comodule algebra")
    bad = 0
    for b in RF.basis:
        z = _as_map(field, b, V, V)
        vec, _ = to_tensor(F_inv @ kron(IV, z) @ F)
        try:
            tensor_coords(vec, RF, Rphi, "(d)")
        except SpanViolation:
            bad += 1
    if bad:
        drep.fail("Delta_F(im rho_F) in im(rho_F) (x) im(rho_phi)", bad)
    certs.append(drep)

    # (e) r_F(v) = F(v (x) I)
    erep = CheckReport("(e) r_F comodule, compatible with r_phi")
    entries = []
    for j in range(v):
        for i in range(v):
            c = LF.coords(TF.row(i * v + j), "(e) r_F")
            entries.extend((i * q + k, j, val) for k, val in enumerate(c) if val)
    rF = LegMap((V, LFs), (V,), Mat.from_entries(field, v * q, v, entries))
    erep.compare("(r_F (x) I) r_F = (I (x) Delta_{F,phi}) r_F", kron(rF, ILF) @ rF, kron(IV, delta) @ rF)
    entries = []
    for k, x in enumerate(lf_maps):
        for a, b, val in x.mat.items():
            entries.append((a, k * m + b, val))
    muF = LegMap((V,), (LFs, M), Mat.from_entries(field, v, q * m, entries))
    t23 = permute_legs((0, 2, 1, 3), (LFs, LFs, M, hopf.H), field)
    erep.compare("r_F(x m) = Delta_{F,phi}(x) r_phi(m)", rF @ muF,
                 kron(muF, right_mul) @ t23 @ kron(delta, rec.coaction))
    certs.append(erep)

    # (f) the pair (V, M) rebuilds F
    frep = CheckReport("(f) (I (x) mu_F)(r_F (x) I) = F")
    frep.compare("(I (x) mu_F)(r_F (x) I) = F", kron(IV, muF) @ kron(rF, IM), F)
    certs.append(frep)

    return MPEReconstructionReport(LF.basis, RF.basis, delta, rF, certs)
