import pytest
from hypothesis import given, settings, strategies as st

from pentagon.errors import CounitUnsolvable, SpanViolation
from pentagon.field import GF, QQ
from pentagon.galois import galois_mpe, torsor
from pentagon.groups import cyclic, symmetric3
from pentagon.hopf import (check_hopf_axioms, dual_group_algebra, group_algebra,
                           multiplicity_module, phi_from_hopf_module, sweedler4)
from pentagon.linalg import Mat
from pentagon.pentagon import (PentagonSolution, diagonal_pair, flip_solution, mpe_solution,
                               multiplicity, op_solution, pentagon_solution, transport_pentagon)
from pentagon.reconstruction import (Span, coinvariants_phi, counit_certificate,
                                     lambda_rho_images, mpe_reconstruct, reconstruct_hopf,
                                     roundtrip, tensor_coords)
from pentagon.report import CheckReport
from pentagon.tensor import LegMap, Space

from conftest import invertible_matrices


def identity_solution(n, field=QQ):
    M = Space("M", n)
    return pentagon_solution(LegMap.identity(field, (M, M)))


def phi_of(h, d=1):
    return phi_from_hopf_module(multiplicity_module(h, d))


C2 = group_algebra(cyclic(2), QQ)
SW = sweedler4(QQ)


def test_images_identity():
    lr = lambda_rho_images(identity_solution(3))
    ident = {0: 1, 4: 1, 8: 1}
    assert lr.H_basis == [ident] and lr.R_basis == [ident]
    assert lr.pairing_matrix.to_dense() == [[1]]


def test_images_c2():
    lr = lambda_rho_images(phi_of(C2))
    assert lr.report.passed
    assert lr.H_basis == [{0: 1, 3: 1}, {1: 1, 2: 1}]      # I, L_a
    assert lr.R_basis == [{0: 1}, {3: 1}]                  # E_ee, E_aa
    assert lr.pairing_matrix.is_invertible()
    assert len(lambda_rho_images(multiplicity(phi_of(C2), 2)).H_basis) == 2


def test_reconstruct_c2():
    rec = reconstruct_hopf(phi_of(C2))
    assert rec.passed
    h = rec.hopf
    assert h.dim == 2
    assert h.delta.mat.column(1) == {3: 1}          # L_a -> L_a (x) L_a
    assert h.counit.mat.to_dense() == [[1, 1]]
    assert h.antipode.mat.is_identity()
    assert h.unit.mat.column(0) == {0: 1}


def test_reconstruct_identity():
    rec = reconstruct_hopf(identity_solution(3))
    assert rec.passed and rec.dim_H == 1
    for name in ("mu", "unit", "delta", "counit", "antipode"):
        assert getattr(rec.hopf, name).mat.to_dense() == [[1]]


def test_reconstruct_sweedler():
    rec = reconstruct_hopf(phi_of(SW))
    assert rec.passed and rec.dim_H == 4
    assert check_hopf_axioms(rec.hopf).passed
    S = rec.hopf.antipode
    assert not (S @ S).mat.is_identity()
    assert (S @ S @ S @ S).mat.is_identity()


def test_coinvariants_phi():
    assert len(coinvariants_phi(identity_solution(4))) == 4
    assert coinvariants_phi(phi_of(C2)) == [{0: 1}]       # span{e_e}
    assert len(coinvariants_phi(multiplicity(phi_of(C2), 3))) == 3


@pytest.mark.parametrize("h, d, dims", [(C2, 1, (2, 1)), (SW, 2, (4, 2)),
                                        (group_algebra(symmetric3(), QQ), 2, (6, 2)),
                                        (dual_group_algebra(cyclic(4), QQ), 3, (4, 3))])
def test_roundtrip(h, d, dims):
    ps = phi_of(h, d)
    rec = reconstruct_hopf(ps)
    rep = roundtrip(ps, rec)
    assert rep.passed, str(rep)
    assert (rec.dim_H, rec.dim_coinv) == dims
    assert rec.theta is not None and rec.theta.mat.is_invertible()


def test_roundtrip_identity():
    ps = identity_solution(5)
    rec = reconstruct_hopf(ps)
    assert roundtrip(ps, rec).passed
    assert (rec.dim_H, rec.dim_coinv) == (1, 5)


def test_counit_certificate():
    assert counit_certificate(identity_solution(2)).coeffs == [0, 1]
    c = counit_certificate(phi_of(C2))
    assert c.coeffs == [0, 0, 1] and c.minimal == [-1, 0, 1]
    sw = counit_certificate(phi_of(SW))
    assert sw.report.passed and sw.coeffs[0] == 0


def test_counit_unsolvable():
    # D (x) D with D = diag(1, 2) reshuffles to a rank-one T whose image misses I
    M = Space("M", 2)
    phi = LegMap((M, M), (M, M), Mat.from_dense(QQ, [[1, 0, 0, 0], [0, 2, 0, 0],
                                                       [0, 0, 2, 0], [0, 0, 0, 4]]))
    with pytest.raises(CounitUnsolvable):
        reconstruct_hopf(PentagonSolution(M, phi, CheckReport("unchecked")))


def test_tensor_coords_span_violation():
    A = Span(QQ, 2, [{0: 1}])
    assert tensor_coords({0: 3}, A, A, "x") == [3]
    with pytest.raises(SpanViolation):
        tensor_coords({1: 1}, A, A, "x")


@pytest.mark.parametrize("field", [QQ, GF(5)])
@pytest.mark.parametrize("which", ["C2x2", "Sweedler"])
@settings(max_examples=5, deadline=None)
@given(data=st.data())
def test_dimensions_invariant_under_transport(field, which, data):
    h = group_algebra(cyclic(2), field) if which == "C2x2" else sweedler4(field)
    ps = phi_of(h, 2 if which == "C2x2" else 1)
    g = LegMap((ps.M,), (ps.M,), data.draw(invertible_matrices(field, ps.M.dim, bound=2)))
    moved = transport_pentagon(ps, g)
    rec, rec2 = reconstruct_hopf(ps), reconstruct_hopf(moved)
    assert (rec.dim_H, rec.dim_coinv) == (rec2.dim_H, rec2.dim_coinv)
    assert roundtrip(moved, rec2).passed
    assert counit_certificate(moved).report.passed


def test_mpe_reconstruct_examples():
    out = mpe_reconstruct(diagonal_pair(phi_of(C2)))
    assert out.passed and len(out.LF_basis) == 2
    assert len(out.certificates) == 6
    t3 = galois_mpe(torsor(cyclic(3), QQ))
    assert mpe_reconstruct(t3).passed
    one = Space("one", 1)
    I = LegMap.identity(QQ, (one, one))
    out1 = mpe_reconstruct(mpe_solution(I, I))
    assert out1.passed and len(out1.LF_basis) == len(out1.RF_basis) == 1


@pytest.mark.parametrize("make", [
    lambda: flip_solution(diagonal_pair(phi_of(SW))),
    lambda: op_solution(phi_of(group_algebra(cyclic(3), QQ))),
    lambda: diagonal_pair(multiplicity(phi_of(C2), 3)),
    lambda: galois_mpe(torsor(cyclic(4), GF(5))),
])
def test_mpe_reconstruct_final_certificate(make):
    out = mpe_reconstruct(make())
    assert out.passed
    assert out.certificates[-1].name.startswith("(f)")
