import pytest

from ringlab import (
    CLASSIFICATION_FIELDS,
    build,
    check_isomorphic,
    classify,
    classify_element_summary,
    cyclic,
    group_ring,
    product_ring,
    trivial_extension,
    trunc_poly,
    zn,
)
from oracles import diagram_implications


def test_z2_everything_true(z2):
    c = classify(z2)
    for name in ("is_clean", "is_strongly_clean", "is_UC", "is_USC", "is_CUC",
                 "is_CUSC", "is_UUC", "is_UUSC", "is_boolean", "is_reduced",
                 "is_abelian", "is_commutative", "is_local", "is_regular",
                 "is_semi_potent", "is_potent", "is_semi_boolean"):
        assert getattr(c, name) is True, name


def test_t2z2_vector(t2z2):
    c = classify(t2z2)
    assert c.is_USC and c.is_CUSC and c.is_UUC
    assert not c.is_CUC and not c.is_UC and not c.is_abelian
    assert c.witnesses["is_CUC"]["element"]


def test_z3_not_cusc(z3):
    c = classify(z3)
    assert not c.is_CUSC
    assert c.one_is_two_good
    assert c.witnesses["is_CUSC"]["element"] == "2"


def test_z4_uc_via_local(z4):
    c = classify(z4)
    assert c.is_UC and c.is_local and c.RmodJ_boolean and c.U_equals_one_plus_J


def test_m2z2_clean_not_uusc(m2z2):
    c = classify(m2z2)
    assert c.is_clean and not c.is_UUSC
    assert c.is_regular and not c.is_local
    assert c.one_is_two_good
    assert c.is_quasi_duo_left is False


def test_element_summary(z6):
    summary = classify_element_summary(z6)
    assert len(summary) == 6
    assert all(p.is_clean for p in summary)
    rg = group_ring(zn(2), cyclic(3))
    profiles = classify_element_summary(rg)
    from ringlab import units

    unit_ids = set(units(rg).members)
    assert any(
        p.element in unit_ids and len(p.strongly_clean_decomps) >= 2
        for p in profiles
    )


def test_zero_ring_by_the_letter():
    one = build({"zn": 1})
    c = classify(one)
    assert c.is_boolean and c.is_UC and c.is_USC and c.is_CUSC and c.is_UUSC
    assert c.is_local and c.is_potent
    assert c.one_is_two_good  # 1 = 0 = 0 + 0 with 0 a unit


def test_quasi_duo_tristate():
    c = classify(zn(4), quasi_duo_order_limit=2)
    assert c.is_quasi_duo_left is None
    assert c.to_json()["is_quasi_duo_left"] == "skipped"
    assert "skipped" in c.witnesses["is_quasi_duo_left"]


def test_json_stable_fields(z4):
    doc = classify(z4).to_json()
    for name in CLASSIFICATION_FIELDS:
        assert name in doc


def test_diagram_implications_on_catalog(suite_ctx):
    for entry in suite_ctx.entries:
        c = suite_ctx.classification(entry.ring)
        for name, holds in diagram_implications(c):
            assert holds, (entry.name, name)


def test_usc_reading_changes_only_strong_family(z3):
    strict = classify(z3, usc_reading="exact-one")
    relaxed = classify(z3, usc_reading="at-most-one")
    assert strict.is_UC == relaxed.is_UC
    assert strict.is_CUC == relaxed.is_CUC


def test_isomorphic_pairs(z6):
    assert check_isomorphic(z6, product_ring([zn(2), zn(3)])).found
    result = check_isomorphic(trivial_extension(zn(2)), trunc_poly(zn(2), 2))
    assert result.found
    phi = result.mapping
    a_ring = trivial_extension(zn(2))
    b_ring = trunc_poly(zn(2), 2)
    for x in a_ring.elements():
        for y in a_ring.elements():
            assert phi[a_ring.mul(x, y)] == b_ring.mul(phi[x], phi[y])
            assert phi[a_ring.add(x, y)] == b_ring.add(phi[x], phi[y])


def test_non_isomorphic_pairs(z4):
    assert not check_isomorphic(z4, product_ring([zn(2), zn(2)])).found
    assert not check_isomorphic(z4, zn(3)).found
    # Same additive group, different multiplication.
    assert not check_isomorphic(build({"zn": 9}), build({"trunc_poly": {"base": {"zn": 3}, "n": 2}})).found


def test_isomorphism_respects_size_limit(z4):
    from ringlab import SizeOverflowError

    with pytest.raises(SizeOverflowError):
        check_isomorphic(zn(300), zn(300), order_limit=64)
