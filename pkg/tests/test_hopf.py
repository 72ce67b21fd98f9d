from dataclasses import replace

import pytest

from pentagon.errors import AxiomViolation, CharTwoUnsupported, NotAGroup
from pentagon.field import GF, QQ
from pentagon.groups import (Group, check_right_action, cyclic, direct_product, groups_up_to,
                             is_free_transitive, klein4, right_actions, symmetric3)
from pentagon.hopf import (HopfModule, builtin, check_factorization, check_hopf_axioms,
                           check_hopf_module, coinvariants, dual_group_algebra,
                           fundamental_iso, group_algebra, multiplicity_module,
                           phi_from_hopf_module, phi_inverse_via_antipode, phi_map, sweedler4,
                           trivial_module)
from pentagon.linalg import Mat
from pentagon.pentagon import multiplicity
from pentagon.tensor import LegMap, kron


# groups

def test_group_validation():
    with pytest.raises(NotAGroup):
        Group([[0, 1], [1, 1]])
    assert symmetric3().order == 6
    assert [g.name for g in groups_up_to(4)] == ["C1", "C2", "C3", "C4", "V4"]
    S3 = symmetric3()
    assert any(S3.mul(a, b) != S3.mul(b, a) for a in range(6) for b in range(6))
    assert direct_product(cyclic(2), cyclic(3)).order == 6


def test_actions():
    G = cyclic(2)
    acts = right_actions(G, 2)
    assert len(acts) == 2      # trivial and swap
    assert sum(is_free_transitive(G, a) for a in acts) == 1
    assert check_right_action(G, [[0, 0], [1, 1]])
    assert not check_right_action(G, [[1, 0], [0, 1]])
    # the number of right actions of V4 on 2 points = homomorphisms V4 -> S2
    assert len(right_actions(klein4(), 2)) == 4


# Hopf algebras

def test_c2_axioms_by_hand():
    h = group_algebra(cyclic(2), QQ)
    # e = 0, a = 1; product index i*2+j
    assert h.mu.mat.to_dense() == [[1, 0, 0, 1], [0, 1, 1, 0]]
    assert h.delta.mat.to_dense() == [[1, 0], [0, 0], [0, 0], [0, 1]]
    assert h.counit.mat.to_dense() == [[1, 1]]
    assert h.antipode.mat.is_identity()
    assert check_hopf_axioms(h).passed


def test_corrupted_antipode():
    h = group_algebra(cyclic(2), QQ)
    bad = LegMap(h.antipode.codomain, h.antipode.domain, Mat.from_dense(QQ, [[1, 1], [0, 0]]))
    rep = check_hopf_axioms(replace(h, antipode=bad))
    assert not rep.passed
    assert all("S" in label for label, _ in rep.violations)


@pytest.mark.parametrize("field", [QQ, GF(3), GF(5), GF(7)])
def test_sweedler_presentation(field):
    h = sweedler4(field)
    assert check_hopf_axioms(h).passed
    idx = lambda a, b: 2 * a + b   # g^a x^b
    one, g, x, gx = idx(0, 0), idx(1, 0), idx(0, 1), idx(1, 1)
    mu = h.mu.mat
    prod = lambda i, j: mu.column(i * 4 + j)
    assert prod(g, g) == {one: 1}
    assert prod(x, x) == {}
    assert prod(x, g) == {gx: field.reduce(-1)}
    assert prod(g, x) == {gx: 1}
    assert h.delta.mat.column(g) == {g * 4 + g: 1}
    assert h.delta.mat.column(x) == {x * 4 + one: 1, g * 4 + x: 1}
    assert h.antipode.mat.column(g) == {g: 1}
    assert h.antipode.mat.column(x) == {gx: field.reduce(-1)}
    S = h.antipode
    assert not (S @ S).mat.is_identity()
    assert (S @ S @ S @ S).mat.is_identity()


def test_sweedler_char_two():
    with pytest.raises(CharTwoUnsupported):
        sweedler4(GF(2))


def test_dual_group_algebra_is_transpose():
    G = cyclic(4)
    h, d = group_algebra(G, QQ), dual_group_algebra(G, QQ)
    assert check_hopf_axioms(d).passed
    assert d.mu.mat == h.delta.mat.transpose()
    assert d.delta.mat == h.mu.mat.transpose()
    assert d.counit.mat == h.unit.mat.transpose()


def test_builtins():
    k = group_algebra(cyclic(1), QQ)
    assert k.dim == 1 and all(getattr(k, n).mat.to_dense() == [[1]] for n in
                              ("mu", "unit", "delta", "counit", "antipode"))
    assert check_hopf_axioms(builtin("S3", QQ)).passed
    assert builtin("C3", QQ).dim == 3


# Hopf modules

def test_module_examples():
    h3 = group_algebra(cyclic(3), QQ)
    assert check_hopf_module(trivial_module(h3)).passed
    h2 = group_algebra(cyclic(2), QQ)
    assert check_hopf_module(multiplicity_module(h2, 2)).passed
    bad = HopfModule(h2, h2.H, h2.mu, kron(h2.ident(), h2.unit))
    rep = check_hopf_module(bad)
    assert [label for label, _ in rep.violations] == ["H-linearity"]


def test_phi_sweedler_and_inverse():
    hm = trivial_module(sweedler4(QQ))
    ps = phi_from_hopf_module(hm)
    assert ps.phi.mat.shape == (16, 16)
    assert (phi_inverse_via_antipode(hm) @ ps.phi).mat.is_identity()
    hm2 = trivial_module(group_algebra(cyclic(2), QQ))
    assert phi_inverse_via_antipode(hm2) == phi_map(hm2)
    k = trivial_module(group_algebra(cyclic(1), QQ))
    assert phi_map(k).mat.is_identity()


def test_multiplicity_module_matches_combinator():
    h = group_algebra(cyclic(2), QQ)
    a = phi_from_hopf_module(multiplicity_module(h, 2)).phi
    b = multiplicity(phi_from_hopf_module(trivial_module(h)), 2).phi
    assert a.mat == b.mat


def test_coinvariants():
    h = group_algebra(cyclic(3), QQ)
    assert coinvariants(trivial_module(h)) == [{0: 1}]
    assert len(coinvariants(multiplicity_module(h, 3))) == 3
    k = group_algebra(cyclic(1), QQ)
    M = multiplicity_module(k, 4)
    assert len(coinvariants(M)) == 4


def test_fundamental_iso():
    h = group_algebra(cyclic(2), QQ)
    iso = fundamental_iso(trivial_module(h))
    assert iso.report.passed and iso.theta.mat.is_identity()
    iso3 = fundamental_iso(multiplicity_module(h, 3))
    assert iso3.report.passed and iso3.theta.mat.shape == (6, 6)
    for name in ("sweedler", "s3", "dual"):
        hh = {"sweedler": sweedler4(QQ), "s3": group_algebra(symmetric3(), QQ),
              "dual": dual_group_algebra(cyclic(4), QQ)}[name]
        hm = multiplicity_module(hh, 2)
        assert check_factorization(hm).passed


def test_fundamental_iso_rejects_corrupted_coaction():
    h = group_algebra(cyclic(2), QQ)
    # coaction m -> m (x) 1 is not H-linear: the module check fails first
    bad = HopfModule(h, h.H, h.mu, kron(h.ident(), h.unit))
    with pytest.raises(AxiomViolation):
        fundamental_iso(bad)
    k = group_algebra(cyclic(1), QQ)
    assert fundamental_iso(multiplicity_module(k, 2)).report.passed
