import pytest

from ringlab import Group, RingConstructionError, cyclic, dihedral, group_from_spec, klein_four, quaternion8, symmetric3


@pytest.mark.parametrize("group,order,two_group", [
    (cyclic(1), 1, True),
    (cyclic(2), 2, True),
    (cyclic(3), 3, False),
    (cyclic(4), 4, True),
    (cyclic(6), 6, False),
    (klein_four(), 4, True),
    (dihedral(3), 6, False),
    (dihedral(4), 8, True),
    (symmetric3(), 6, False),
    (quaternion8(), 8, True),
])
def test_families_validate(group, order, two_group):
    assert group.order == order
    assert group.is_two_group == two_group
    for a in range(group.order):
        assert group.mul(a, group.identity) == a
        assert group.mul(group.inverse[a], a) == group.identity


def test_quaternion_relations():
    q8 = quaternion8()
    i, j, k = q8.labels.index("i"), q8.labels.index("j"), q8.labels.index("k")
    minus_one = q8.labels.index("-1")
    assert q8.mul(i, i) == minus_one
    assert q8.mul(j, j) == minus_one
    assert q8.mul(i, j) == k
    assert q8.mul(j, i) == q8.labels.index("-k")


def test_symmetric3_nonabelian():
    s3 = symmetric3()
    assert any(
        s3.mul(a, b) != s3.mul(b, a)
        for a in range(6) for b in range(6)
    )


def test_invalid_table_rejected():
    with pytest.raises(RingConstructionError):
        Group([[0, 1], [1, 1]], 0)  # row 1 repeats: not a permutation
    with pytest.raises(RingConstructionError):
        Group([[1, 0], [0, 1]], 0)  # 0 is not an identity


def test_group_from_spec_roundtrip():
    assert group_from_spec({"cyclic": 5}).order == 5
    assert group_from_spec("klein_four").name == "V4"
    assert group_from_spec({"dihedral": 4}).order == 8
    table = cyclic(3).table.tolist()
    g = group_from_spec({"table": {"mul": table, "identity": 0}})
    assert g.order == 3


def test_element_orders_power_of_two_definition():
    # D4 has order 8 but is checked element by element, not by |G|.
    d4 = dihedral(4)
    orders = {d4.element_order(a) for a in range(8)}
    assert orders == {1, 2, 4}
