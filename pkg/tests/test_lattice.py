import pytest

from quivercert import GF, QQ, Matrix
from quivercert import presets
from quivercert.decompose import is_indecomposable, is_isomorphic
from quivercert.lattice import (
    ExtensionClass, LatticeError, constant_lattice, eps_alpha, ext_nonzero,
    external_product, kronecker_family, kunneth_witness, odim_witness,
    rational_points, scale_class, tensor_lattice, tensor_module,
    tensor_sequence, yoneda_cocycle, cocycle_is_coboundary,
)
from quivercert.module import Module, projective, simple


def test_kronecker_family_specializations():
    for p in (2, 3, 5):
        field = GF(p)
        alg = presets.kronecker(field)
        lat = kronecker_family(alg)
        for a in range(p):
            m = lat.specialize([a])
            assert m.dim_vector() == (1, 1)
            assert is_indecomposable(m)
        assert lat.specialize([1]).action["b"][0, 0] == 1


def test_constant_lattice_specializes_to_module():
    alg = presets.kronecker(GF(5))
    p1 = projective(alg, "1")
    lat = constant_lattice(p1)
    for a in range(5):
        m = lat.specialize([a])
        ok, _ = is_isomorphic(m, p1)
        assert ok
        assert m.dim_vector() == tuple(lat.rank[v] for v in alg.quiver.vertices)


def test_eps_alpha_middle_is_jordan():
    field = GF(2)
    s_ts, mid_ts, _ = eps_alpha(field, 0)
    assert mid_ts[0].to_lists() == [[0, 0], [1, 0]]


def test_tensor_sequence_kronecker():
    field = GF(3)
    alg = presets.kronecker(field)
    lat = kronecker_family(alg)
    for a in range(3):
        cls = tensor_sequence(lat, a)
        assert cls.exact
        assert cls.mids[0].dim_vector() == (2, 2)
        assert ext_nonzero(cls)  # nonsplit at every rational point


def test_ext_nonzero_agreement_degree_one():
    field = GF(5)
    alg = presets.kronecker(field)
    lat = kronecker_family(alg)
    for a in range(5):
        cls = tensor_sequence(lat, a)
        assert ext_nonzero(cls, via="retraction") == ext_nonzero(cls, via="cocycle")


def test_constant_projective_lattice_splits():
    alg = presets.kronecker(GF(5))
    lat = constant_lattice(projective(alg, "1"))
    cls = tensor_sequence(lat, 2)
    assert not ext_nonzero(cls)
    assert not ext_nonzero(cls, via="cocycle")


def test_eps_generates_one_dimensional_ext():
    # over k[t]/t^2 the self-extension space of the simple is 1-dim and
    # the canonical class is nonzero, so it generates
    field = GF(3)
    alg = presets.truncated_polynomial(field, 2)
    s = simple(alg, "*")
    mid = Module(alg, {"*": 2}, {"t": Matrix.from_rows(field, [[0, 0], [1, 0]])})
    from quivercert.module import ModuleMap
    incl = ModuleMap(s, mid, {"*": Matrix.from_rows(field, [[0], [1]])})
    proj = ModuleMap(mid, s, {"*": Matrix.from_rows(field, [[1, 0]])})
    cls = ExtensionClass(1, s, [mid], s, [incl, proj])
    assert cls.verify_exact()
    assert ext_nonzero(cls)
    from quivercert.module import hom_basis
    from quivercert.functors import min_projective_presentation
    # Ext^1(S,S) dimension: cocycles mod coboundaries on the resolution
    f, e = min_projective_presentation(s)
    from quivercert.lattice import _resolution
    projs, diffs, aug = _resolution(s, 2)
    hom_p1 = hom_basis(projs[1], s)
    cocycles = [h for h in hom_p1]  # all are cocycles for this resolution shape
    cob_rank = 0
    from quivercert.matrix import Matrix as Mx
    cols = []
    for psi in hom_basis(projs[0], s):
        comp = diffs[0].then(psi)
        cols.append([x for v in comp.components for x in comp.components[v].entries])
    if cols:
        mat = Mx(field, len(cols[0]), len(cols),
                 [cols[c][r] for r in range(len(cols[0])) for c in range(len(cols))])
        cob_rank = mat.rank()
    cocycle_rank = len(hom_p1)
    assert cocycle_rank - cob_rank == 1


def test_specialize_commutes_with_tensor():
    field = GF(2)
    kron = presets.kronecker(field)
    kk = presets.kronecker_squared(field)
    lat = kronecker_family(kron)
    prod = tensor_lattice(kk, lat, lat)
    for a in range(2):
        for b in range(2):
            direct = prod.specialize([a, b])
            via_modules = tensor_module(kk, lat.specialize([a]), lat.specialize([b]))
            assert direct.dim_vector() == via_modules.dim_vector()
            ok, _ = is_isomorphic(direct, via_modules)
            assert ok


def test_external_product_nonzero_on_kk():
    field = GF(2)
    kron = presets.kronecker(field)
    kk = presets.kronecker_squared(field)
    lat = kronecker_family(kron)
    for a in range(2):
        for b in range(2):
            cls_a = tensor_sequence(lat, a)
            cls_b = tensor_sequence(lat, b)
            prod = external_product(kk, cls_a, cls_b)
            assert prod.degree == 2
            assert prod.exact
            assert ext_nonzero(prod)


def test_external_product_orders_cohomologous():
    field = GF(2)
    kron = presets.kronecker(field)
    kk = presets.kronecker_squared(field)
    lat = kronecker_family(kron)
    cls_a = tensor_sequence(lat, 0)
    cls_b = tensor_sequence(lat, 1)
    left = external_product(kk, cls_a, cls_b, order="left")
    right = external_product(kk, cls_a, cls_b, order="right")
    assert ext_nonzero(left) == ext_nonzero(right)
    phi_l, projs, diffs = yoneda_cocycle(left)
    phi_r, _, _ = yoneda_cocycle(right)
    same = cocycle_is_coboundary(phi_l - phi_r, diffs[1])
    flipped = cocycle_is_coboundary(phi_l + phi_r, diffs[1])
    assert same or flipped


def test_external_product_with_degree_zero():
    field = GF(2)
    kron = presets.kronecker(field)
    kk = presets.kronecker_squared(field)
    lat = kronecker_family(kron)
    cls = tensor_sequence(lat, 1)
    other = lat.specialize([0])
    trivial = ExtensionClass(0, other, [], other, [])
    prod = external_product(kk, cls, trivial)
    assert prod.degree == 1
    assert prod.exact


def test_product_with_split_class_is_zero():
    field = GF(2)
    kron = presets.kronecker(field)
    kk = presets.kronecker_squared(field)
    fam = kronecker_family(kron)
    split_lat = constant_lattice(projective(kron, "1"))
    cls_a = tensor_sequence(fam, 1)
    cls_split = tensor_sequence(split_lat, 0)
    prod = external_product(kk, cls_a, cls_split)
    assert not ext_nonzero(prod)


def test_scaling_bilinearity_degree_one():
    field = GF(5)
    alg = presets.kronecker(field)
    lat = kronecker_family(alg)
    cls = tensor_sequence(lat, 2)
    scaled = scale_class(cls, 3)
    # both nonzero; difference of cocycles is NOT a coboundary for the
    # scaled-by-nonunit... rather: cocycle(scaled) = 3^{-1} cocycle(cls)
    phi, projs, diffs = yoneda_cocycle(cls)
    phi_s, _, _ = yoneda_cocycle(scaled)
    inv3 = field.inv(field.from_int(3))
    diff = phi_s - phi.scale(inv3)
    assert cocycle_is_coboundary(diff, diffs[0])


def test_odim_witness_kronecker_all_fields():
    for p in (2, 3, 5):
        alg = presets.kronecker(GF(p))
        lat = kronecker_family(alg)
        cert = odim_witness(lat)
        assert cert["points"] == p
        assert cert["passed"] == p
        assert cert["witness_for_odim_ge"] == 1


def test_odim_witness_constant_lattice_fails_everywhere():
    alg = presets.kronecker(GF(5))
    lat = constant_lattice(projective(alg, "1"))
    cert = odim_witness(lat)
    assert cert["passed"] == 0
    assert cert["witness_for_odim_ge"] == 0


def test_kunneth_witness_kk_over_f2():
    field = GF(2)
    kron = presets.kronecker(field)
    kk = presets.kronecker_squared(field)
    lat = kronecker_family(kron)
    cert = kunneth_witness(kk, lat, lat)
    assert cert["points"] == 4
    assert cert["passed"] == 4
    assert cert["witness_for_odim_ge"] == 2


def test_lattice_rejects_bad_relations():
    field = GF(3)
    alg = presets.kronecker_tensor_a2(field)
    from quivercert.lattice import Lattice, poly_constant, poly_from_terms
    rank = {v: 1 for v in alg.quiver.vertices}
    action = {a.name: [[poly_constant(field, 1, 1)]] for a in alg.quiver.arrows}
    with pytest.raises(LatticeError):
        # commutativity fails if one diagonal leg carries T
        action["a.1"] = [[poly_from_terms(field, [("1", (1,))], 1)]]
        Lattice(alg, 1, rank, action)
