import numpy as np
import pytest

from ringlab import (
    BimoduleError,
    EndomorphismError,
    RingConstructionError,
    SizeOverflowError,
    SpecError,
    build,
    check_isomorphic,
    corner_ring,
    cyclic,
    formal_triangular,
    gf,
    group_ring,
    ideal_extension,
    idempotents,
    jacobson_radical,
    matrix_ring,
    opposite_ring,
    product_ring,
    quotient_ring,
    skew_trunc_poly,
    subring_generated,
    triangular_ring,
    trivial_extension,
    trivial_morita,
    trunc_poly,
    units,
    validate_axioms,
    validate_spec,
    zn,
)
from oracles import naive_units


Z2 = {"zn": 2}
Z4 = {"zn": 4}


def test_build_dispatch_orders():
    assert build({"zn": 4}).order == 4
    assert build({"triangular": {"n": 2, "base": Z2}}).order == 8
    assert build({"product": [Z2, {"zn": 3}]}).order == 6


@pytest.mark.parametrize("n,base_order,expected", [
    (2, 2, 8), (3, 2, 64), (2, 4, 64),
])
def test_triangular_orders(n, base_order, expected):
    assert triangular_ring(n, zn(base_order)).order == expected


def test_matrix_ring_identity_and_order(m2z2):
    assert m2z2.order == 16
    assert m2z2.label_of(m2z2.one) == "(1 0;0 1)"
    # The two displayed matrices summing to the identity are units.
    a = m2z2.id_of("(1 1;1 0)")
    b = m2z2.id_of("(0 1;1 1)")
    inv = naive_units(m2z2)
    assert a in inv and b in inv
    assert m2z2.add(a, b) == m2z2.one


def test_quotient_examples(z4, z6, t2z2):
    q = quotient_ring(z4, [2])
    assert q.order == 2
    assert check_isomorphic(q, zn(2)).found
    assert quotient_ring(z6, [3]).order == 3
    jac = jacobson_radical(t2z2).sorted_ids()
    qt = quotient_ring(t2z2, jac)
    assert qt.order == 4
    assert check_isomorphic(qt, product_ring([zn(2), zn(2)])).found
    # Projection maps onto quotient ids and respects multiplication.
    proj = qt.meta["projection"]
    for a in t2z2.elements():
        for b in t2z2.elements():
            assert proj[t2z2.mul(a, b)] == qt.mul(int(proj[a]), int(proj[b]))


def test_quotient_degenerate_cases(z4):
    assert quotient_ring(z4, []).order == 4
    assert quotient_ring(z4, [1]).order == 1


def test_corner_rings(m2z2, z4):
    assert corner_ring(z4, 1).order == 4
    assert corner_ring(z4, 0).order == 1
    e = m2z2.id_of("(1 0;0 0)")
    corner = corner_ring(m2z2, e)
    assert corner.order == 2
    assert check_isomorphic(corner, zn(2)).found
    embed = corner.meta["embedding"]
    for x in corner.elements():
        for y in corner.elements():
            assert int(embed[corner.mul(x, y)]) == m2z2.mul(int(embed[x]), int(embed[y]))
    assert int(embed[corner.one]) == e
    with pytest.raises(RingConstructionError):
        corner_ring(m2z2, m2z2.id_of("(0 1;0 0)"))


def test_group_ring_augmentation(z2, z4):
    rg = group_ring(z2, cyclic(3))
    assert rg.order == 8
    one_plus_g = rg.id_of("1+g")
    eps = rg.meta["augmentation"]
    assert int(eps[one_plus_g]) == 0  # 1 + 1 = 0 in Z2
    kernel = rg.meta["aug_kernel"]
    assert len(kernel) == 4
    assert kernel.members == {int(i) for i in np.flatnonzero(eps == z2.zero)}
    assert group_ring(z2, cyclic(2)).order == 4
    assert group_ring(z4, cyclic(2)).order == 16


def test_trivial_extension(z2):
    te = trivial_extension(z2)
    assert te.order == 4
    v = te.id_of("(0,1)")
    assert te.mul(v, v) == te.zero
    assert te.label_of(te.one) == "(1,0)"
    assert check_isomorphic(te, trunc_poly(z2, 2)).found


def test_ideal_extension_zero_mul_matches_trivial_extension(z2):
    ie = ideal_extension(
        z2,
        {"add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 0]]},
        [[0, 0], [0, 1]],
        [[0, 0], [0, 1]],
    )
    te = trivial_extension(z2)
    assert (ie.add_table == te.add_table).all()
    assert (ie.mul_table == te.mul_table).all()
    assert ie.meta["hypotheses"] == {
        "idempotents_central_on_m": True, "m_quasi_regular": True,
    }


def test_ideal_extension_2z4_table_comparison(z2):
    # Spec'd as isomorphic to Z4, but the additive group is Z2 + Z2:
    # the table comparison lands on Z2[x]/(x^2) instead (see ledger).
    ie = ideal_extension(
        z2,
        {"add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 0]], "labels": ["0", "2"]},
        [[0, 0], [0, 1]],
        [[0, 0], [0, 1]],
    )
    assert ie.order == 4
    assert check_isomorphic(ie, trunc_poly(zn(2), 2)).found
    assert not check_isomorphic(ie, zn(4)).found


def test_ideal_extension_identity(z2):
    ie = ideal_extension(
        z2,
        {"add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 0]]},
        [[0, 0], [0, 1]],
        [[0, 0], [0, 1]],
    )
    assert ie.label_of(ie.one) == "(1,0)"


def test_ideal_extension_rejects_bad_action(z2):
    with pytest.raises(BimoduleError):
        ideal_extension(
            z2,
            {"add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 0]]},
            [[0, 1], [0, 1]],  # 0 * m = m violates additivity in the ring
            [[0, 0], [0, 1]],
        )


def test_formal_triangular(z2, z4):
    ft = formal_triangular(
        z2, z2, {"add": [[0, 1], [1, 0]]}, [[0, 0], [0, 1]], [[0, 0], [0, 1]]
    )
    assert ft.order == 8
    assert check_isomorphic(ft, triangular_ring(2, zn(2))).found
    # A = Z2, B = Z4, M = Z2 with the doubled action collapsing to 0.
    right = [[0, 0, 0, 0], [0, 1, 0, 1]]
    ft2 = formal_triangular(z2, z4, {"add": [[0, 1], [1, 0]]}, [[0, 0], [0, 1]], right)
    assert ft2.order == 16
    # Zero bimodule gives the product ring.
    ftz = formal_triangular(z2, z2, {"add": [[0]]}, [[0], [0]], [[0, 0]])
    assert check_isomorphic(ftz, product_ring([zn(2), zn(2)])).found


def test_trivial_morita(z2):
    m = {"add": [[0, 1], [1, 0]]}
    act = [[0, 0], [0, 1]]
    mc = trivial_morita(z2, z2, m, act, act, m, act, act)
    assert mc.order == 16
    zero_mod = {"add": [[0]]}
    zl = [[0], [0]]
    zr = [[0, 0]]
    mc0 = trivial_morita(z2, z2, zero_mod, zl, zr, zero_mod, zl, zr)
    assert check_isomorphic(mc0, product_ring([zn(2), zn(2)])).found
    half = trivial_morita(z2, z2, m, act, act, zero_mod, zl, zr)
    assert half.order == 8
    assert check_isomorphic(half, triangular_ring(2, zn(2))).found


def test_trunc_poly(z2):
    r = trunc_poly(z2, 2)
    assert r.order == 4
    x = r.id_of("x")
    assert r.mul(x, x) == r.zero
    base_again = trunc_poly(z2, 1)
    assert base_again.order == 2
    assert trunc_poly(zn(4), 2).order == 16


def test_skew_trunc_poly_frobenius(f4):
    sk = skew_trunc_poly(f4, {"frobenius": 2}, 2)
    assert sk.order == 16
    x = sk.id_of("x")
    w = sk.id_of("w")
    w2 = sk.id_of("1+w")  # w^2 = w + 1 in F4
    # x * w = w^2 * x
    assert sk.mul(x, w) == sk.mul(w2, x)
    assert validate_axioms(sk).ok


def test_skew_rejects_non_endomorphism(z4, z6):
    with pytest.raises(EndomorphismError):
        skew_trunc_poly(z4, {"map": [1, 2, 3, 0]}, 2)
    with pytest.raises(EndomorphismError):
        # Squaring is not additive mod 6.
        skew_trunc_poly(z6, {"frobenius": 2}, 2)


def test_opposite(t2z2):
    op = opposite_ring(t2z2)
    assert (op.mul_table == t2z2.mul_table.T).all()
    opop = opposite_ring(op)
    assert (opop.mul_table == t2z2.mul_table).all()
    for a in t2z2.elements():
        for b in t2z2.elements():
            assert op.mul(a, b) == t2z2.mul(b, a)


def test_gf_construction():
    f8 = gf(2, 3)
    assert f8.order == 8
    assert len(naive_units(f8)) == 7
    f9 = gf(3, 2)
    assert f9.order == 9
    assert len(naive_units(f9)) == 8
    with pytest.raises(SpecError):
        gf(4, 1)


def test_product_orders_multiply():
    r = product_ring([zn(2), zn(3), zn(4)])
    assert r.order == 24
    assert r.label_of(r.one) == "(1,1,1)"


def test_subring_generated(z6):
    sub = subring_generated(z6, [])
    assert sub.order == 6  # 1 generates Z6 additively
    m2 = matrix_ring(2, zn(2))
    e = m2.id_of("(1 0;0 0)")
    sub2 = subring_generated(m2, [e])
    assert sub2.order == 4


def test_size_overflow():
    with pytest.raises(SizeOverflowError):
        matrix_ring(3, zn(8))  # 8^9 far beyond the cap
    with pytest.raises(SizeOverflowError):
        group_ring(zn(4), cyclic(11))


def test_lazy_constructor_path():
    lazy = triangular_ring(2, zn(4), threshold=32)
    dense = triangular_ring(2, zn(4))
    assert lazy.order == dense.order == 64
    assert type(lazy).__name__ == "LazyRing"
    assert (lazy.mul_table == dense.mul_table).all()
    assert (lazy.add_table == dense.add_table).all()
    assert lazy.labels == dense.labels
    q = quotient_ring(lazy, jacobson_radical(lazy).sorted_ids())
    assert q.order == 4


def test_spec_validation_errors():
    with pytest.raises(SpecError):
        validate_spec({"nope": 1})
    with pytest.raises(SpecError):
        validate_spec({"zn": 0})
    with pytest.raises(SpecError):
        validate_spec({"triangular": {"n": 2}})
    validate_spec({"skew_trunc_poly": {"base": Z2, "alpha": "identity", "n": 2}})
    # The error carries the JSON path of the offence.
    try:
        validate_spec({"triangular": {"n": 2, "base": {"zn": "x"}}})
    except SpecError as exc:
        assert "$" in str(exc)
    else:
        pytest.fail("expected SpecError")


def test_provenance_spec_attached():
    spec = {"triangular": {"n": 2, "base": Z2}}
    ring = build(spec)
    assert ring.spec == spec
    assert ring.name == "T2(Z2)"


def test_every_constructor_output_validates(small_catalog):
    for entry in small_catalog:
        assert validate_axioms(entry.ring, force=True).ok, entry.name
