"""The acceptance corpus: each criterion is a function returning a CheckReport
whose children are the individual cases."""

from __future__ import annotations

import contextlib
import io as _io
import json
import os
import tempfile

from .errors import NotCongruent, NotGalois
from .field import GF, QQ
from .galois import galois_check, galois_mpe, group_set_coalgebra, torsor
from .groups import (cyclic, groups_up_to, is_free_transitive, right_actions,
                     symmetric3)
from .hopf import (dual_group_algebra, fundamental_iso, group_algebra,
                   multiplicity_module, phi_from_hopf_module, phi_inverse_via_antipode,
                   sweedler4, trivial_module)
from .linalg import Mat
from .pentagon import (check_mpe, check_pentagon, coproduct_from_solution, delta_F,
                       diagonal_pair, extract_phi, flip_solution, mpe_solution, multiplicity,
                       op_solution, solution_from_coproduct, tensor_solutions)
from .phimod import (character_action, counit_action, module_from_hopf, regular_action,
                     self_module, tensor_phi_modules)
from .reconstruction import counit_certificate, mpe_reconstruct, reconstruct_hopf, roundtrip
from .report import CheckReport
from .tensor import LegMap, Space, permute_legs


def hopf_corpus():
    """Builtin Hopf algebras: k[C1..C6], k[S3], k^C2, k^C4, Sweedler over Q, GF(3), GF(5), GF(7)."""
    out = [group_algebra(cyclic(n), QQ) for n in range(1, 7)]
    out.append(group_algebra(symmetric3(), QQ))
    out.append(dual_group_algebra(cyclic(2), QQ))
    out.append(dual_group_algebra(cyclic(4), QQ))
    out.extend(sweedler4(F) for F in (QQ, GF(3), GF(5), GF(7)))
    return out


def module_corpus(max_d: int = 3):
    return [(h, d, multiplicity_module(h, d)) for h in hopf_corpus() for d in range(1, max_d + 1)]


def _phi(h, d=1):
    return phi_from_hopf_module(multiplicity_module(h, d))


def mpe_corpus():
    """Named verified MPE solutions: combinator outputs, torsors and ``(t, I)``."""
    c2 = _phi(group_algebra(cyclic(2), QQ))
    c3 = _phi(group_algebra(cyclic(3), QQ))
    sw = _phi(sweedler4(QQ))
    dual = _phi(dual_group_algebra(cyclic(2), QQ))
    tors = {f"torsor {G.name}": galois_mpe(torsor(G, QQ)) for G in (cyclic(2), cyclic(3), cyclic(4))}
    V = Space("V", 2)
    t = permute_legs((1, 0), (V, V), QQ)
    out = {
        "(phi, phi) C2": diagonal_pair(c2),
        "(phi, phi) Sweedler": diagonal_pair(sw),
        "flip (phi, phi) C2": flip_solution(diagonal_pair(c2)),
        "flip (phi, phi) Sweedler": flip_solution(diagonal_pair(sw)),
        "op C2": op_solution(c2),
        "op C3": op_solution(c3),
        "op Sweedler": op_solution(sw),
        "op k^C2": op_solution(dual),
        "tensor C2 (x) torsor C3": tensor_solutions(diagonal_pair(c2), tors["torsor C3"]),
        "multiplicity 2 of C2": diagonal_pair(multiplicity(c2, 2)),
        "multiplicity 3 of C2": diagonal_pair(multiplicity(c2, 3)),
        "flip torsor C4": flip_solution(tors["torsor C4"]),
        "(t, I)": mpe_solution(t, LegMap.identity(QQ, (V, V))),
    }
    out.update(tors)
    return out


def _case(name: str, fn) -> CheckReport:
    rep = CheckReport(name)
    try:
        child = fn()
        if isinstance(child, CheckReport):
            rep.extend(child)
        elif not child:
            rep.fail("check", 1)
    except Exception as e:  # noqa: BLE001 - reported as a failed case
        rep.fail(f"{type(e).__name__}: {e}", 1)
    return rep


def _label(h, d):
    return f"{h.name} x{d}"


def criterion_pentagon_construction():
    rep = CheckReport("pentagon construction")
    for h, d, hm in module_corpus():
        rep.extend(_case(_label(h, d), lambda hm=hm: check_pentagon(phi_from_hopf_module(hm).phi)))
    return rep


def criterion_antipode_inverse():
    rep = CheckReport("antipode inverse")

    def one(hm):
        r = CheckReport("inverse")
        ps = phi_from_hopf_module(hm)
        r.compare("phi^-1 phi = I", phi_inverse_via_antipode(hm) @ ps.phi,
                  LegMap.identity(hm.field, (hm.M, hm.M)))
        return r

    for h, d, hm in module_corpus():
        rep.extend(_case(_label(h, d), lambda hm=hm: one(hm)))
    return rep


def criterion_fundamental_theorem():
    rep = CheckReport("fundamental theorem")

    def one(hm, h, d):
        iso = fundamental_iso(hm)
        iso.report.require("dim H * dim M_H = dim M", h.dim * len(iso.basis) == hm.M.dim)
        iso.report.require("dim M_H = multiplicity", len(iso.basis) == d)
        return iso.report

    for h, d, hm in module_corpus():
        rep.extend(_case(_label(h, d), lambda hm=hm, h=h, d=d: one(hm, h, d)))
    return rep


def criterion_reconstruction():
    rep = CheckReport("reconstruction round trip")

    def one(h, d, expect=None):
        ps = _phi(h, d)
        rec = reconstruct_hopf(ps)
        r = roundtrip(ps, rec)
        r.require("dim im(lambda) = dim H", rec.dim_H == h.dim)
        r.require("dim M_H = d", rec.dim_coinv == d)
        if expect is not None:
            r.require(f"(dim H, dim M_H) = {expect}", (rec.dim_H, rec.dim_coinv) == expect)
        return r

    rep.extend(_case("C2 gives (2, 1)", lambda: one(group_algebra(cyclic(2), QQ), 1, (2, 1))))
    rep.extend(_case("Sweedler x2 gives (4, 2)", lambda: one(sweedler4(QQ), 2, (4, 2))))
    for h, d, _ in module_corpus():
        rep.extend(_case(_label(h, d), lambda h=h, d=d: one(h, d)))
    return rep


def criterion_hamilton_cayley():
    rep = CheckReport("polynomial unit certificate")
    for h, d, hm in module_corpus():
        rep.extend(_case(_label(h, d),
                         lambda hm=hm: counit_certificate(phi_from_hopf_module(hm)).report))
    return rep


def criterion_modified_pentagon():
    rep = CheckReport("modified pentagon")

    def one(s):
        r = CheckReport("mpe and extraction")
        r.extend(check_mpe(s.F, s.phi))
        phi = extract_phi(s.F)
        r.compare("extracted phi = phi", phi, s.phi)
        r.extend(check_pentagon(phi))
        return r

    for name, s in mpe_corpus().items():
        rep.extend(_case(name, lambda s=s: one(s)))
    return rep


def _corrupt(X: LegMap, i=0, j=0) -> LegMap:
    entries = [(r, c, v) for r, c, v in X.mat.items()]
    entries.append((i, j, 1))
    return LegMap(X.codomain, X.domain, Mat.from_entries(X.field, X.mat.nrows, X.mat.ncols, entries))


def cea_inputs():
    V = Space("V", 2)
    c2 = _phi(group_algebra(cyclic(2), QQ)).phi
    sw = _phi(sweedler4(QQ)).phi
    return {
        "I": LegMap.identity(QQ, (V, V)),
        "t": permute_legs((1, 0), (V, V), QQ),
        "PhiC2": c2,
        "PhiSw": sw,
    }


def criterion_coproduct_roundtrip():
    rep = CheckReport("coproduct round trip")

    def one(F):
        r = CheckReport("round trip")
        cm = coproduct_from_solution(F)
        s = solution_from_coproduct(cm)
        r.compare("Delta_F' = Delta_F", delta_F(s.F).delta, cm.delta)
        try:
            extract_phi(_corrupt(F, 0, 1))
            r.fail("corrupted F rejected", 1)
        except NotCongruent:
            pass
        return r

    for name, F in cea_inputs().items():
        rep.extend(_case(name, lambda F=F: one(F)))
    return rep


def criterion_galois_boundary():
    rep = CheckReport("Galois boundary")

    def one(G, n):
        r = CheckReport("G-sets")
        for action in right_actions(G, n):
            galois = galois_check(group_set_coalgebra(G, action, QQ)).passed
            if galois != is_free_transitive(G, action):
                r.fail(f"action {action}", 1)
        return r

    for G in groups_up_to(4):
        for n in range(1, 5):
            rep.extend(_case(f"{G.name} on {n} points", lambda G=G, n=n: one(G, n)))

    def trivial_two_points():
        G = cyclic(2)
        try:
            galois_mpe(group_set_coalgebra(G, [[0, 0], [1, 1]], QQ))
        except NotGalois:
            return True
        return False

    rep.extend(_case("2-point trivial action is not Galois", trivial_two_points))
    return rep


def criterion_mpe_reconstruction():
    rep = CheckReport("MPE reconstruction")

    def one(s):
        r = CheckReport("certificates (a)-(f)")
        out = mpe_reconstruct(s)
        for c in out.certificates:
            r.extend(c)
        r.require("six certificates", len(out.certificates) == 6)
        return r

    for name, s in mpe_corpus().items():
        rep.extend(_case(name, lambda s=s: one(s)))
    return rep


def criterion_phi_modules():
    rep = CheckReport("phi-modules")
    for h in hopf_corpus():
        def one(h=h):
            r = CheckReport("module_from_hopf")
            hm = trivial_module(h)
            triv = module_from_hopf(hm, *counit_action(hm))
            reg = module_from_hopf(hm, *regular_action(hm))
            r.extend(triv.report)
            r.extend(reg.report)
            r.compare("regular psi = phi", reg.psi, reg.base.phi)
            r.extend(tensor_phi_modules(triv, reg).report)
            r.extend(tensor_phi_modules(reg, self_module(reg.base)).report)
            return r

        rep.extend(_case(h.name, one))

    def sign():
        hm = trivial_module(group_algebra(cyclic(2), QQ))
        m = module_from_hopf(hm, *character_action(hm, [1, -1], "sgn"))
        return tensor_phi_modules(m, m).report

    rep.extend(_case("sign representation of C2", sign))
    return rep


def _run_cli(argv):
    from .cli import main

    out = _io.StringIO()
    err = _io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue()


def criterion_cli():
    from .io import emit, parse

    rep = CheckReport("command line")
    with tempfile.TemporaryDirectory() as tmp:
        def path(name):
            return os.path.join(tmp, name)

        def example_roundtrip(name):
            r = CheckReport("emit(parse) bit-exact")
            code, _ = _run_cli(["example", "--name", name, "--out", path(f"{name}.json")])
            r.require("example exit 0", code == 0)
            with open(path(f"{name}.json"), encoding="utf-8") as fh:
                text = fh.read()
            r.require("emit(parse(text)) = text", emit(parse(text)) == text)
            return r

        for name in ("c2", "sweedler", "torsor-c3"):
            rep.extend(_case(f"canonical document {name}", lambda name=name: example_roundtrip(name)))

        def pipeline():
            code, out = _run_cli(["check-pe", "--in", path("c2.json")])
            return code == 0 and json.loads(out)["pass"] is True

        rep.extend(_case("example c2 then check-pe exits 0", pipeline))

        def corrupted():
            doc = json.load(open(path("c2.json"), encoding="utf-8"))
            grid = doc["maps"]["phi"]["matrix"]
            grid[0][1] = "1"
            with open(path("bad.json"), "w", encoding="utf-8") as fh:
                json.dump(doc, fh)
            code, out = _run_cli(["check-pe", "--in", path("bad.json")])
            report = json.loads(out)
            counts = [v["count"] for c in report["certificates"] for v in c["violations"]]
            return code == 1 and sum(counts) > 0

        rep.extend(_case("corrupted PhiC2 exits 1", corrupted))

        def malformed():
            with open(path("broken.json"), "w", encoding="utf-8") as fh:
                fh.write('{"field": {"kind": "rational"}, "spaces": ')
            code, _ = _run_cli(["check-pe", "--in", path("broken.json")])
            return code == 2

        rep.extend(_case("malformed JSON exits 2", malformed))

        def reconstruct_mult():
            code, _ = _run_cli(["example", "--name", "c2", "--mult", "3", "--out", path("c2x3.json")])
            code2, out = _run_cli(["reconstruct", "--in", path("c2x3.json")])
            values = json.loads(out)["values"]
            return code == 0 and code2 == 0 and values["dim_H"] == 2 and values["dim_coinv"] == 3

        rep.extend(_case("reconstruct on C2 x3 reports (2, 3)", reconstruct_mult))
    return rep


CRITERIA = [
    (1, "pentagon construction from Hopf modules", criterion_pentagon_construction),
    (2, "antipode formula inverts phi", criterion_antipode_inverse),
    (3, "fundamental theorem of Hopf modules", criterion_fundamental_theorem),
    (4, "reconstruction round trip", criterion_reconstruction),
    (5, "polynomial certificate f(phi) = I", criterion_hamilton_cayley),
    (6, "modified pentagon corpus", criterion_modified_pentagon),
    (7, "coproduct <-> solution round trip", criterion_coproduct_roundtrip),
    (8, "Galois boundary for G-sets", criterion_galois_boundary),
    (9, "MPE reconstruction certificates", criterion_mpe_reconstruction),
    (10, "phi-modules", criterion_phi_modules),
    (11, "command line interface", criterion_cli),
]


def run_all(numbers=None) -> list[tuple[int, str, CheckReport]]:
    out = []
    for num, title, fn in CRITERIA:
        if numbers is not None and num not in numbers:
            continue
        out.append((num, title, fn()))
    return out
