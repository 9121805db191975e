import pytest

from quivercert import GF, QQ, Matrix
from quivercert import presets
from quivercert.module import Module, projective, simple
from quivercert.torsfin import (
    IncompleteInventory, NoProjInj, TorsionlessInventory, UnknownStrategy,
    biserial_condition, detect_class, enumerate_torsionless,
    gamma_bijection_check, projinj_reduce, verify_inventory,
)


def test_detect_class_tags():
    assert detect_class(presets.a3_rad_square(QQ)) == {"rad_square_zero"}
    assert detect_class(presets.kronecker(QQ)) == {"rad_square_zero", "hereditary"}
    assert detect_class(presets.commutative_square_plus(QQ)) == set()


def test_detect_special_biserial_flag_echo():
    from quivercert.algebra import build_algebra
    from quivercert.quiver import Quiver
    q = Quiver.build(["1", "2"], [("a", "1", "2")])
    alg = build_algebra(q, QQ, [], flags=["special_biserial"])
    assert "special_biserial_input" in detect_class(alg)


def test_inventory_a3rad2_counts():
    alg = presets.a3_rad_square(QQ)
    inv = enumerate_torsionless(alg)
    assert inv.status == "complete"
    assert inv.strategy == "rad_square_zero"
    assert len(inv.torsionless) == 4
    assert len(inv.divisible) == 4
    assert len(inv.non_projective_torsionless()) == 1
    assert len(inv.non_injective_divisible()) == 1


def test_inventory_hereditary_kronecker():
    alg = presets.kronecker(GF(3))
    inv = enumerate_torsionless(alg)
    # rad-square-zero wins in auto; torsionless = projectives + torsionless simples
    assert inv.status == "complete"
    simples_t = [m for m in inv.torsionless if m.total_dim() == 1]
    assert len(inv.torsionless) == 2  # P(1), P(2) = S(2); S(2) dedups with P(2)
    inv_h = enumerate_torsionless(alg, strategy="hereditary")
    assert len(inv_h.torsionless) == 2


def test_inventory_commutative_square_counts():
    alg = presets.commutative_square_plus(GF(3))
    inv = enumerate_torsionless(alg, seed=0)
    assert inv.status == "bounded"
    assert len(inv.torsionless) == 6
    assert len(inv.divisible) == 6


def test_inventory_local_xy_counts():
    alg = presets.local_xy(GF(3))
    inv = enumerate_torsionless(alg, seed=0)
    assert inv.status == "bounded"
    assert len(inv.torsionless) == 5
    assert len(inv.divisible) == 5


def test_unknown_strategy_rejected():
    alg = presets.a3_rad_square(QQ)
    with pytest.raises(UnknownStrategy):
        enumerate_torsionless(alg, strategy="magic")
    with pytest.raises(UnknownStrategy):
        enumerate_torsionless(presets.commutative_square_plus(QQ),
                              strategy="rad_square_zero")


def test_verify_inventory_passes_on_fixtures():
    for maker, field in ((presets.a3_rad_square, QQ),
                         (presets.commutative_square_plus, GF(3)),
                         (presets.local_xy, GF(3))):
        alg = maker(field)
        inv = enumerate_torsionless(alg, seed=0)
        cert = verify_inventory(alg, inv, samples=40, seed=1)
        assert cert["pass"], cert["failures"]


def test_verify_inventory_fails_on_empty():
    alg = presets.a3_rad_square(QQ)
    empty = TorsionlessInventory(alg, [], [], "complete", "rad_square_zero")
    cert = verify_inventory(alg, empty, samples=5, seed=0)
    assert not cert["pass"]
    kinds = {f["kind"] for f in cert["failures"]}
    assert "projective_missing" in kinds


def test_verify_inventory_fails_on_truncated_kron_a2():
    # listing only the projectives plus eta(I) misses torsionless classes
    alg = presets.kronecker_tensor_a2(GF(5))
    from quivercert.module import injective, quotient, radical, socle
    projs = [projective(alg, x) for x in alg.quiver.vertices]
    eta_i, _ = radical(projective(alg, "1.1"))
    injs = [injective(alg, x) for x in alg.quiver.vertices]
    q4 = injective(alg, "2.2")
    _, incl = socle(q4)
    eta_t, _ = quotient(q4, incl)
    short = TorsionlessInventory(alg, projs + [eta_i], injs + [eta_t],
                                 "bounded", "bounded_search")
    cert = verify_inventory(alg, short, samples=200, seed=3)
    assert not cert["pass"]
    assert any(f["kind"] == "unlisted_torsionless_class" for f in cert["failures"])


def test_gamma_bijection_a3rad2():
    alg = presets.a3_rad_square(QQ)
    inv = enumerate_torsionless(alg)
    cert = gamma_bijection_check(alg, inv)
    assert cert["pass"], cert["failures"]
    assert cert["non_projective_torsionless"] == 1
    assert cert["pairs"][0]["source"] == [0, 1, 0]
    assert cert["pairs"][0]["target"] == [0, 1, 0]


def test_gamma_bijection_needs_complete():
    alg = presets.commutative_square_plus(GF(3))
    inv = enumerate_torsionless(alg, seed=0)
    with pytest.raises(IncompleteInventory):
        gamma_bijection_check(alg, inv)
    cert = gamma_bijection_check(alg, inv, assume_complete=True)
    assert cert["pass"], cert["failures"]
    assert cert["assumed_complete"]
    assert cert["non_projective_torsionless"] == 1
    assert cert["non_injective_divisible"] == 1


def test_gamma_bijection_local_xy():
    alg = presets.local_xy(GF(3))
    inv = enumerate_torsionless(alg, seed=0)
    cert = gamma_bijection_check(alg, inv, assume_complete=True)
    assert cert["pass"], cert["failures"]
    assert cert["non_projective_torsionless"] == 4
    assert cert["non_injective_divisible"] == 4


def test_biserial_condition_string_projectives():
    alg = presets.a3_rad_square(QQ)
    for x in alg.quiver.vertices:
        ok, witness = biserial_condition(projective(alg, x))
        assert ok and witness is None


def test_biserial_condition_fails_on_equal_images():
    alg = presets.kronecker(GF(5))
    m = Module(alg, {"1": 1, "2": 2},
               {"a": Matrix.from_rows(GF(5), [[1], [0]]),
                "b": Matrix.from_rows(GF(5), [[1], [0]])})
    ok, witness = biserial_condition(m)
    assert not ok
    assert witness["vertex"] == "2"


def test_projinj_reduce_full_square():
    alg = presets.full_commutative_square(QQ)
    res = projinj_reduce(alg)
    assert not res.semisimple
    assert res.proj_inj_vertex == "t"
    assert res.algebra_prime.dim == alg.dim - 1
    assert all(len(path) >= 2 for _, path in res.ideal_terms)


def test_projinj_reduce_a3rad2_finds_p2():
    # P(2) = Q(1) is projective-injective here, so the reduction proceeds
    res = projinj_reduce(presets.a3_rad_square(QQ))
    assert not res.semisimple
    assert res.proj_inj_vertex == "2"
    assert res.algebra_prime.dim == 4


def test_projinj_reduce_none_on_kronecker():
    with pytest.raises(NoProjInj):
        projinj_reduce(presets.kronecker(QQ))


def test_projinj_reduce_semisimple_flag():
    res = projinj_reduce(presets.semisimple(QQ, 3))
    assert res.semisimple


def test_projinj_reduce_a2_drops_arrow():
    alg = presets.a2(QQ)
    res = projinj_reduce(alg)
    assert not res.semisimple
    assert res.algebra_prime.dim == 2
    assert res.algebra_prime.is_semisimple()


def test_cor21_torsionless_counts_match_opposite():
    # |torsionless over A| = |torsionless over A^op| for complete inventories
    alg = presets.a3_rad_square(QQ)
    inv = enumerate_torsionless(alg)
    inv_op = enumerate_torsionless(alg.opposite())
    assert len(inv.torsionless) == len(inv_op.torsionless)
