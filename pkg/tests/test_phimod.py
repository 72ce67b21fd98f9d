import pytest

from pentagon.errors import AxiomViolation, Singular
from pentagon.field import QQ
from pentagon.groups import cyclic
from pentagon.linalg import Mat
from pentagon.hopf import group_algebra, phi_from_hopf_module, sweedler4, trivial_module
from pentagon.phimod import (character_action, check_action, check_phi_module,
                             check_phi_morphism, counit_action, identity_module,
                             module_from_hopf, regular_action, self_module, tensor_phi_modules)
from pentagon.tensor import LegMap, Space, permute_legs

HM = trivial_module(group_algebra(cyclic(2), QQ))
BASE = phi_from_hopf_module(HM)


def test_module_examples():
    assert self_module(BASE).report.passed
    assert identity_module(BASE, Space("X", 3)).report.passed
    reg = module_from_hopf(HM, *regular_action(HM))
    assert reg.psi.mat == BASE.phi.mat


def test_singular_psi():
    X = Space("X", 1)
    with pytest.raises(Singular):
        check_phi_module(BASE, X, LegMap.zeros(QQ, (BASE.M, X), (BASE.M, X)))


def test_non_module_detected():
    # the flip is not a module structure over PhiC2
    t = permute_legs((1, 0), (BASE.M, BASE.M), QQ)
    assert not check_phi_module(BASE, BASE.M, t).passed


def test_morphisms():
    a = self_module(BASE)
    one = LegMap.identity(QQ, (a.X,))
    assert check_phi_morphism(a, a, one).passed
    assert check_phi_morphism(a, a, LegMap.zeros(QQ, (a.X,), (a.X,))).passed
    b = identity_module(BASE, a.X)
    assert not check_phi_morphism(a, b, one).passed


def test_morphism_composition():
    a = self_module(BASE)
    # translation by a commutes with the left-multiplication in phi because C2 is abelian
    f = LegMap((a.X,), (a.X,), Mat.from_dense(QQ, [[0, 1], [1, 0]]))
    g = f + LegMap.identity(QQ, (a.X,))
    assert check_phi_morphism(a, a, f).passed
    assert check_phi_morphism(a, a, g).passed
    assert check_phi_morphism(a, a, g @ f).passed


def test_tensor_products():
    a = self_module(BASE)
    triv = identity_module(BASE, Space("Y", 2))
    assert tensor_phi_modules(a, triv).report.passed
    assert tensor_phi_modules(a, a).report.passed
    sign = module_from_hopf(HM, *character_action(HM, [1, -1], "sgn"))
    left = tensor_phi_modules(tensor_phi_modules(a, sign), a)
    right = tensor_phi_modules(a, tensor_phi_modules(sign, a))
    assert left.psi.mat == right.psi.mat


def test_module_from_hopf_examples():
    triv = module_from_hopf(HM, *counit_action(HM))
    assert triv.psi.mat.is_identity()
    sign = module_from_hopf(HM, *character_action(HM, [1, -1], "sgn"))
    assert sign.psi.mat.to_dense() == [[1, 0], [0, -1]]
    sw = trivial_module(sweedler4(QQ))
    assert module_from_hopf(sw, *regular_action(sw)).report.passed


def test_bad_action_rejected():
    X, bad = character_action(HM, [1, 2], "bad")   # a^2 must act as 1
    assert not check_action(HM, X, bad).passed
    with pytest.raises(AxiomViolation):
        module_from_hopf(HM, X, bad)
