from random import Random

import pytest

from qschur.linalg import RowSpace
from qschur.ring import Specialization
from qschur.schur import (FALLBACK_FLAGS, ModuleElement, SchurContext,
                          verify_basis_with_fallback)
from qschur.tableaux import enumerate_ssyt, superstandard

QLEN = dict(m_convention="qlen", y_convention="signed")


def test_z_examples(schur21):
    lam2 = schur21.weight([(2,)])
    assert schur21.z_element(lam2) == schur21.algebra.one() + schur21.algebra.T(1)
    lam11 = schur21.weight([(1, 1)])
    z11 = schur21.z_element(lam11)
    assert not z11.is_zero()


def test_z_level_two_single_box():
    sc = SchurContext(1, 2, (1, 1))
    lam = sc.weight([(1,), (0,)])
    S = sc.algebra.scalars
    expected = sc.algebra.jucys_murphy(1) - sc.algebra.one().scale(S.Q(2))
    assert sc.z_element(lam) == expected


def test_z_rejects_non_partition(schur21):
    with pytest.raises(ValueError):
        schur21.z_element(schur21.weight([(0, 2)]))


def test_superstandard_vector_is_z(schur22):
    for lam in schur22.partitions():
        A = superstandard(lam, schur22.shape)
        h = schur22.basis_vector(lam, lam, A)
        assert h.elem == schur22.z_element(lam)


def test_basis_vector_nonzero_and_counts(schur22):
    for lam in schur22.partitions():
        total = 0
        for A in enumerate_ssyt(lam, schur22.shape):
            vec = schur22.basis_vector(lam, A.type_weight(), A)
            assert not vec.elem.is_zero()
            total += 1
        assert total == schur22.weyl_dim_count(lam)


def test_basis_vector_membership(schur22):
    spec = Specialization.random(2, Random(71))
    lam = schur22.weight([(1,), (1,)])
    for A in enumerate_ssyt(lam, schur22.shape):
        mu = A.type_weight()
        h = schur22.basis_vector(lam, mu, A)
        assert schur22.certify_membership(ModuleElement(mu, h.elem), spec)


def test_weyl_dim_counts(schur21, schur22):
    assert schur21.weyl_dim_count(schur21.weight([(2,)])) == 3
    assert schur21.weyl_dim_count(schur21.weight([(1, 1)])) == 1
    assert schur22.weyl_dim_count(schur22.weight([(1,), (1,)])) == 8


@pytest.mark.parametrize("n,r,m", [(2, 1, (2,)), (3, 1, (3,)),
                                   (2, 2, (2, 2)), (1, 2, (1, 1))])
def test_independence_certified_all_weights(n, r, m):
    sc = SchurContext(n, r, m)
    for lam in sc.partitions():
        rep = sc.verify_basis_independence(lam, seed=0)
        assert rep["certified"], (lam.trimmed(), rep)
        assert rep["rank"] == rep["count"] == sc.weyl_dim_count(lam)


def test_independence_under_fallback_flags():
    sc = SchurContext(2, 2, (2, 2), **QLEN)
    for lam in sc.partitions():
        rep = sc.verify_basis_independence(lam, seed=0)
        assert rep["certified"]


def test_fallback_driver_reports_flags():
    rep = verify_basis_with_fallback(2, 2, (2, 2), [(1,), (1,)], seed=0)
    assert rep["certified"]
    assert rep["literal_flags"] is True
    assert rep["flags"] == {"m_convention": "plain", "y_convention": "plain"}
    assert FALLBACK_FLAGS == ("qlen", "signed")


def test_idempotent_apply(schur22):
    lam = schur22.weight([(1,), (1,)])
    mu = schur22.weight([(2,), (0,)])
    x_lam = schur22.x_module(lam)
    assert schur22.idempotent_apply(lam, x_lam) is x_lam
    assert schur22.idempotent_apply(mu, x_lam).elem.is_zero()
    # idempotence
    once = schur22.idempotent_apply(lam, x_lam)
    assert schur22.idempotent_apply(lam, once) == once


def test_idempotent_family_completeness(schur22):
    # the projector family acts as the identity on a formal direct sum
    module = {mu.parts: schur22.x_module(mu) for mu in schur22.weights()}
    for mu in schur22.weights():
        acc = schur22.algebra.zero()
        for lam in schur22.weights():
            acc = acc + schur22.idempotent_apply(lam, module[mu.parts]).elem
        assert acc == module[mu.parts].elem


def test_ef_zero_out_of_range(schur22):
    for mu in schur22.weights():
        for idx in schur22.ef_indices():
            for kind, sign in (("E", 1), ("F", -1)):
                if schur22.weight_step(mu, idx, sign) is None:
                    assert schur22.ef_image_of_x(idx, kind, mu).is_zero()


def test_ef_hom_property(schur22):
    for mu in schur22.weights():
        me = schur22.x_module(mu)
        for idx in schur22.ef_indices():
            for kind in ("E", "F"):
                for j in range(schur22.n):
                    moved = ModuleElement(mu, me.elem * schur22.algebra.T(j))
                    lhs = schur22.ef_apply(idx, kind, moved).elem
                    rhs = schur22.ef_apply(idx, kind, me).elem * schur22.algebra.T(j)
                    assert lhs == rhs


def test_ef_conventions_validated(schur22):
    specs = [Specialization.random(2, Random(101)),
             Specialization.random(2, Random(202))]
    rep = schur22.ef_convention_report(specs)
    assert rep["validated"], rep["failures"]
    assert rep["failures"] == []


def test_ef_weight_behaviour(schur22):
    # 1_{mu+alpha} o E o 1_mu == E o 1_mu: the image is tagged mu+alpha
    mu = schur22.weight([(1,), (1,)])
    for idx in schur22.ef_indices():
        out = schur22.ef_apply(idx, "E", schur22.x_module(mu))
        tgt = schur22.weight_step(mu, idx, 1)
        if tgt is not None:
            assert out.weight == tgt
            assert schur22.idempotent_apply(tgt, out) == out


def test_hom_solver_oracle():
    # the cellular tableau count matches the solver under the
    # quasi-idempotent normalisation
    sc = SchurContext(2, 1, (2,), **QLEN)
    spec = Specialization.random(1, Random(5))
    mu, nu = sc.weight([(2,)]), sc.weight([(1, 1)])
    imgs = sc.hom_space_images(mu, nu, spec)
    assert len(imgs) == sc.cellular_hom_dimension(mu, nu) == 1
    imgs_id = sc.hom_space_images(mu, mu, spec)
    assert len(imgs_id) == sc.cellular_hom_dimension(mu, mu) == 1
    space = RowSpace(sc.algebra.dimension())
    for v in imgs_id:
        space.add(v)
    assert space.contains(sc.x_element(mu).specialize_vector(spec))
    # under the plain flags the module is the full algebra and the solver
    # honestly reports the larger dimension
    plain = SchurContext(2, 1, (2,))
    assert len(plain.hom_space_images(mu, nu, spec)) == 2


def test_ef_images_in_solved_space(schur22):
    spec = Specialization.random(2, Random(7))
    for mu in schur22.weights():
        for idx in schur22.ef_indices():
            for kind, sign in (("E", 1), ("F", -1)):
                tgt = schur22.weight_step(mu, idx, sign)
                img = schur22.ef_image_of_x(idx, kind, mu)
                if tgt is None:
                    assert img.is_zero()
                    continue
                if img.is_zero():
                    continue
                space = RowSpace(schur22.algebra.dimension())
                for v in schur22.hom_space_images(mu, tgt, spec):
                    space.add(v)
                assert space.contains(img.specialize_vector(spec))


def test_basis_report_schema(schur21):
    rep = schur21.verify_basis_independence(schur21.weight([(2,)]), seed=4)
    for key in ("lambda", "count", "rank", "certified", "flags",
                "specialization"):
        assert key in rep
    assert rep["flags"] == {"m_convention": "plain", "y_convention": "plain"}
