"""Command line front end. Every command prints one JSON report on stdout.

Exit codes: 0 when every certificate passes, 1 when a mathematical check
fails, 2 for malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from math import isqrt

from . import io as docio
from .errors import AxiomViolation, InputError, MathError, PentagonError, ShapeError
from .field import GF, field_from_name
from .galois import (ModuleCoalgebra, PairedComoduleData, build_FV, check_module_coalgebra,
                     check_paired_data, galois_check, galois_map, galois_paired_data,
                     group_set_coalgebra, torsor)
from .groups import cyclic, symmetric3
from .hopf import (HopfAlgebra, HopfModule, check_hopf_axioms, check_hopf_module,
                   dual_group_algebra, group_algebra, multiplicity_module, phi_inverse_via_antipode,
                   phi_map, sweedler4, trivial_module)
from .pentagon import (CoproductMap, check_coproduct, check_equivalence, check_mpe,
                       check_pentagon, coproduct_from_solution, end_space, extract_phi,
                       flip_solution, mpe_solution, multiplicity, op_solution, pentagon_solution,
                       solution_from_coproduct, tensor_solutions)
from .phimod import PhiModule, check_phi_module, check_phi_morphism, tensor_phi_modules
from .reconstruction import counit_certificate, mpe_reconstruct, reconstruct_hopf, roundtrip
from .report import CheckReport
from .tensor import LegMap, Space

HOPF_MAPS = ("mu", "unit", "delta", "counit", "antipode")
EXAMPLES = ("c1", "c2", "c3", "c4", "c6", "s3", "dual-c2", "dual-c4", "sweedler",
            "torsor-c3", "nongalois-2pt")


class Result:
    def __init__(self, command: str):
        self.command = command
        self.reports: list[CheckReport] = []
        self.values: dict = {}
        self.outputs: docio.Document | None = None
        self.error: dict | None = None

    def add(self, rep: CheckReport) -> CheckReport:
        self.reports.append(rep)
        return rep

    @property
    def passed(self) -> bool:
        return self.error is None and all(r.passed for r in self.reports)

    def as_dict(self) -> dict:
        certs = []
        for r in self.reports:
            for name, ok, viol in r.flat():
                certs.append({"name": name, "pass": ok,
                              "violations": [{"label": l, "count": c} for l, c in viol]})
        out = {"command": self.command, "pass": self.passed, "certificates": certs}
        if self.values:
            out["values"] = self.values
        if self.outputs is not None:
            out["outputs"] = docio.to_json(self.outputs)
        if self.error is not None:
            out["error"] = self.error
        return out


# reading structures out of documents

def hopf_from_doc(doc) -> HopfAlgebra:
    mu, unit, delta, counit, antipode = (doc.get(n) for n in HOPF_MAPS)
    if len(mu.codomain) != 1:
        raise ShapeError("mu must land in a single space H")
    return HopfAlgebra(mu.codomain[0], mu, unit, delta, counit, antipode,
                       str(doc.meta.get("hopf", "H")))


def module_from_doc(doc, h: HopfAlgebra) -> HopfModule:
    action = doc.get("action")
    if len(action.codomain) != 1:
        raise ShapeError("action must land in a single space M")
    return HopfModule(h, action.codomain[0], action, doc.get("coaction"))


def coalgebra_from_doc(doc, h: HopfAlgebra) -> ModuleCoalgebra:
    delta_L = doc.get("delta_L")
    if len(delta_L.domain) != 1:
        raise ShapeError("delta_L must start from a single space L")
    return ModuleCoalgebra(h, delta_L.domain[0], delta_L, doc.get("counit_L"), doc.get("mu_L"))


def mpe_from_doc(doc, suffix=""):
    return mpe_solution(doc.get("F" + suffix), doc.get("phi" + suffix))


def add_hopf(doc, h: HopfAlgebra):
    for name in HOPF_MAPS:
        doc.add(name, getattr(h, name))
    doc.meta.setdefault("hopf", h.name)


def new_doc(field, **meta):
    return docio.Document(field, {}, {}, dict(meta))


# commands

def cmd_check_pe(args, res: Result):
    doc = docio.read_document(args.input)
    phi = doc.get(args.map or "phi")
    res.add(check_pentagon(phi))
    res.values["dim_M"] = phi.domain[0].dim


def cmd_check_mpe(args, res: Result):
    doc = docio.read_document(args.input)
    F, phi = doc.get("F"), doc.get("phi")
    res.add(check_mpe(F, phi))
    res.values.update(dim_V=F.codomain[0].dim, dim_M=phi.domain[0].dim)


def cmd_extract_phi(args, res: Result):
    doc = docio.read_document(args.input)
    F = doc.get("F")
    phi = extract_phi(F)
    res.add(check_pentagon(phi))
    res.add(check_mpe(F, phi))
    res.outputs = new_doc(doc.field).add("F", F).add("phi", phi)


def cmd_coproduct(args, res: Result):
    doc = docio.read_document(args.input)
    cm = coproduct_from_solution(doc.get("F"))
    res.add(check_coproduct(cm))
    res.outputs = new_doc(doc.field, V=cm.V.label).add("coproduct", cm.delta)


def cmd_classify_coproduct(args, res: Result):
    doc = docio.read_document(args.input)
    d = doc.get("coproduct")
    if len(d.domain) != 1 or len(d.codomain) != 2:
        raise ShapeError("coproduct must map End(V) to End(V) (x) End(V)")
    E = d.domain[0]
    n = isqrt(E.dim)
    if n * n != E.dim:
        raise ShapeError(f"{E} is not End(V) for any V")
    m = re.fullmatch(r"End\((.+)\)", E.label)
    V = Space(m.group(1) if m else str(doc.meta.get("V", "V")), n)
    Ev = end_space(V)
    cm = CoproductMap(V, d.relabel(codomain=(Ev, Ev), domain=(Ev,)))
    s = solution_from_coproduct(cm)
    res.add(check_coproduct(cm))
    res.add(s.report)
    res.values["dim_M"] = s.M.dim
    res.outputs = new_doc(doc.field).add("F", s.F).add("phi", s.phi)


def cmd_combine(args, res: Result):
    doc = docio.read_document(args.input)
    op = args.op
    if op == "flip":
        s = flip_solution(mpe_from_doc(doc))
    elif op == "op":
        s = op_solution(pentagon_solution(doc.get("phi")))
    elif op == "tensor":
        if not args.in2:
            raise InputError("--op tensor needs --in2")
        doc2 = docio.read_document(args.in2)
        s = tensor_solutions(mpe_from_doc(doc), mpe_from_doc(doc2))
    else:
        if args.mult_dim is None:
            raise InputError("--op mult needs --mult-dim")
        ps = multiplicity(pentagon_solution(doc.get("phi")), args.mult_dim)
        res.add(ps.report)
        res.outputs = new_doc(doc.field).add("phi", ps.phi)
        return
    res.add(s.report)
    res.outputs = new_doc(doc.field).add("F", s.F).add("phi", s.phi)


def cmd_equiv(args, res: Result):
    doc = docio.read_document(args.input)
    s, s2 = mpe_from_doc(doc), mpe_from_doc(doc, "2")
    res.add(check_equivalence(s, s2, doc.get("f"), doc.get("g")))


def cmd_hopf_axioms(args, res: Result):
    doc = docio.read_document(args.input)
    h = hopf_from_doc(doc)
    res.add(check_hopf_axioms(h))
    res.values["dim_H"] = h.dim


def cmd_hopf_module(args, res: Result):
    doc = docio.read_document(args.input)
    h = hopf_from_doc(doc)
    res.add(check_hopf_axioms(h))
    res.add(check_hopf_module(module_from_doc(doc, h)))


def cmd_hopf_phi(args, res: Result):
    doc = docio.read_document(args.input)
    h = hopf_from_doc(doc)
    hm = module_from_doc(doc, h)
    mrep = res.add(check_hopf_module(hm))
    if not mrep.passed:
        return
    phi = phi_map(hm)
    res.add(check_pentagon(phi))
    inv = CheckReport("antipode inverse")
    inv.compare("phi^-1 phi = I", phi_inverse_via_antipode(hm) @ phi,
                LegMap.identity(doc.field, (hm.M, hm.M)))
    res.add(inv)
    res.outputs = new_doc(doc.field).add("phi", phi)


def cmd_galois(args, res: Result):
    doc = docio.read_document(args.input)
    h = hopf_from_doc(doc)
    mc = coalgebra_from_doc(doc, h)
    mrep = res.add(check_module_coalgebra(mc))
    if not mrep.passed:
        return
    grep_ = res.add(galois_check(mc))
    if grep_.passed:
        F = galois_map(mc)
        phi = phi_map(trivial_module(h))
        res.add(check_mpe(F, phi))
        res.outputs = new_doc(doc.field).add("F", F).add("phi", phi)


def cmd_build_fv(args, res: Result):
    doc = docio.read_document(args.input)
    h = hopf_from_doc(doc)
    mc = coalgebra_from_doc(doc, h)
    hm = module_from_doc(doc, h)
    delta_V = doc.get("delta_V")
    nu = doc.get("nu") if doc.has("nu") else None
    pd = PairedComoduleData(mc, hm, delta_V.domain[0], delta_V, doc.get("pi"), nu)
    prep = res.add(check_paired_data(pd))
    if not prep.passed:
        return
    s = build_FV(pd)
    res.add(s.report)
    res.outputs = new_doc(doc.field).add("F", s.F).add("phi", s.phi)


def cmd_reconstruct(args, res: Result):
    doc = docio.read_document(args.input)
    ps = pentagon_solution(doc.get(args.map or "phi"))
    rec = reconstruct_hopf(ps)
    res.add(roundtrip(ps, rec))
    cert = counit_certificate(ps)
    res.add(cert.report)
    res.values.update(dim_H=rec.dim_H, dim_coinv=rec.dim_coinv, dim_M=ps.M.dim,
                      unit_polynomial=[doc.field.format(c) for c in cert.coeffs])
    out = new_doc(doc.field, hopf="im(lambda)")
    add_hopf(out, rec.hopf)
    out.add("action", rec.module.action).add("coaction", rec.coaction).add("phi", ps.phi)
    res.outputs = out


def cmd_mpe_reconstruct(args, res: Result):
    doc = docio.read_document(args.input)
    s = mpe_from_doc(doc)
    out = mpe_reconstruct(s)
    for c in out.certificates:
        res.add(c)
    res.values.update(dim_LF=len(out.LF_basis), dim_RF=len(out.RF_basis))
    res.outputs = (new_doc(doc.field).add("delta_LF", out.delta_FPhi)
                   .add("coaction_V", out.coaction_V))


def _phi_module(ps, psi: LegMap) -> PhiModule:
    if len(psi.domain) != 2:
        raise ShapeError("psi must act on M (x) X")
    X = psi.domain[1]
    return PhiModule(ps, X, psi, check_phi_module(ps, X, psi))


def cmd_phimod_check(args, res: Result):
    doc = docio.read_document(args.input)
    ps = pentagon_solution(doc.get("phi"))
    a = _phi_module(ps, doc.get("psi"))
    res.add(a.report)
    if doc.has("psi2"):
        b = _phi_module(ps, doc.get("psi2"))
        res.add(b.report)
        if doc.has("f"):
            res.add(check_phi_morphism(a, b, doc.get("f")))


def cmd_phimod_tensor(args, res: Result):
    doc = docio.read_document(args.input)
    ps = pentagon_solution(doc.get("phi"))
    a = _phi_module(ps, doc.get("psi"))
    b = _phi_module(ps, doc.get("psi2"))
    for m in (a, b):
        if not m.report.passed:
            raise AxiomViolation(m.report)
    t = tensor_phi_modules(a, b)
    res.add(t.report)
    res.outputs = new_doc(doc.field).add("phi", ps.phi).add("psi", t.psi)


def example_document(name: str, mult: int, field) -> docio.Document:
    if mult < 1:
        raise InputError("--mult must be positive")
    doc = new_doc(field, example=name, multiplicity=mult)
    hopfs = {
        "c1": lambda: group_algebra(cyclic(1), field),
        "c2": lambda: group_algebra(cyclic(2), field),
        "c3": lambda: group_algebra(cyclic(3), field),
        "c4": lambda: group_algebra(cyclic(4), field),
        "c6": lambda: group_algebra(cyclic(6), field),
        "s3": lambda: group_algebra(symmetric3(), field),
        "dual-c2": lambda: dual_group_algebra(cyclic(2), field),
        "dual-c4": lambda: dual_group_algebra(cyclic(4), field),
        "sweedler": lambda: sweedler4(field),
    }
    if name in hopfs:
        h = hopfs[name]()
        hm = multiplicity_module(h, mult)
    elif name in ("torsor-c3", "nongalois-2pt"):
        if mult != 1:
            raise InputError(f"--mult is not supported for {name}")
        if name == "torsor-c3":
            mc = torsor(cyclic(3), field)
        else:
            mc = group_set_coalgebra(cyclic(2), [[0, 0], [1, 1]], field)
        h = mc.hopf
        hm = trivial_module(h)
        doc.add("delta_L", mc.delta_L).add("counit_L", mc.counit_L).add("mu_L", mc.mu_L)
        if name == "torsor-c3":
            pd = galois_paired_data(mc)
            doc.add("delta_V", pd.delta_V).add("pi", pd.pi).add("nu", pd.nu)
            doc.add("F", galois_map(mc))
    else:
        raise InputError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    add_hopf(doc, h)
    doc.add("action", hm.action).add("coaction", hm.coaction).add("phi", phi_map(hm))
    return doc


def cmd_example(args, res: Result):
    field = GF(args.prime) if args.prime is not None else field_from_name(args.field)
    doc = example_document(args.name, args.mult, field)
    res.add(check_pentagon(doc.get("phi")))
    if doc.has("F"):
        res.add(check_mpe(doc.get("F"), doc.get("phi")))
    res.outputs = doc


def cmd_selftest(args, res: Result):
    from .selftest import run_all

    only = set(args.only) if args.only else None
    for num, title, rep in run_all(only):
        summary = CheckReport(f"criterion {num}: {title}")
        for name, ok, viol in rep.flat():
            for label, count in viol:
                summary.fail(f"{name}: {label}", count)
        res.add(summary)
    res.values["criteria"] = len(res.reports)


COMMANDS = {
    "check-pe": (cmd_check_pe, "verify the pentagon equation for map 'phi'"),
    "check-mpe": (cmd_check_mpe, "verify the modified pentagon equation for 'F' and 'phi'"),
    "extract-phi": (cmd_extract_phi, "recover phi from F alone"),
    "coproduct": (cmd_coproduct, "the coproduct on End(V) induced by F"),
    "classify-coproduct": (cmd_classify_coproduct, "an MPE solution realizing map 'coproduct'"),
    "combine": (cmd_combine, "flip / op / tensor / multiplicity combinators"),
    "equiv": (cmd_equiv, "check (f, g) is an equivalence from (F, phi) to (F2, phi2)"),
    "hopf-axioms": (cmd_hopf_axioms, "verify the Hopf algebra axioms"),
    "hopf-module": (cmd_hopf_module, "verify the Hopf module axioms"),
    "hopf-phi": (cmd_hopf_phi, "the pentagon solution of a Hopf module"),
    "galois": (cmd_galois, "test a module coalgebra for the Galois property"),
    "build-fv": (cmd_build_fv, "the MPE solution of paired comodule data"),
    "reconstruct": (cmd_reconstruct, "rebuild a Hopf algebra and Hopf module from phi"),
    "mpe-reconstruct": (cmd_mpe_reconstruct, "reconstruction certificates for (F, phi)"),
    "phimod-check": (cmd_phimod_check, "verify phi-module 'psi' (and morphism 'f' to 'psi2')"),
    "phimod-tensor": (cmd_phimod_tensor, "tensor product of phi-modules 'psi' and 'psi2'"),
    "example": (cmd_example, "emit a builtin example document"),
    "selftest": (cmd_selftest, "run the acceptance corpus"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pentagon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        p.add_argument("--out", help="write the produced document here")
        if name == "example":
            p.add_argument("--name", required=True, choices=EXAMPLES)
            p.add_argument("--mult", type=int, default=1)
            p.add_argument("--field", default="Q", help="Q or Fp, e.g. F5")
            p.add_argument("--prime", type=int, help="shorthand for --field Fp")
        elif name == "selftest":
            p.add_argument("--only", type=int, nargs="*", help="criterion numbers")
        else:
            p.add_argument("--in", dest="input", required=True, help="input document")
        if name in ("check-pe", "reconstruct"):
            p.add_argument("--map", help="name of the solution map (default phi)")
        if name == "combine":
            p.add_argument("--op", required=True, choices=("flip", "op", "tensor", "mult"))
            p.add_argument("--mult-dim", type=int)
            p.add_argument("--in2", help="second document for --op tensor")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    res = Result(args.command)
    code = None
    try:
        COMMANDS[args.command][0](args, res)
    except InputError as e:
        res.error = {"type": type(e).__name__, "message": str(e)}
        code = 2
    except AxiomViolation as e:
        res.add(e.report)
        res.error = {"type": type(e).__name__, "message": e.report.name}
        code = 1
    except MathError as e:
        res.error = {"type": type(e).__name__, "message": str(e)}
        code = 1
    except PentagonError as e:  # pragma: no cover - every error is one of the above
        res.error = {"type": type(e).__name__, "message": str(e)}
        code = 2
    if code is None:
        code = 0 if res.passed else 1
        if res.outputs is not None and args.out:
            docio.write_document(args.out, res.outputs)
    sys.stdout.write(json.dumps(res.as_dict(), indent=2, sort_keys=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
