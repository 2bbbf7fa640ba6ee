import numpy as np
import pytest

from ringlab import (
    AxiomCheckLimitError,
    LazyRing,
    RingConstructionError,
    table_ring,
    validate_axioms,
    zn,
)
from oracles import naive_units


def zn_tables(n):
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    return add, mul


def test_z4_tables_validate():
    add, mul = zn_tables(4)
    ring = table_ring(add, mul)
    report = validate_axioms(ring)
    assert report.ok
    assert report.mode == "full"


def test_corrupted_z4_rejected():
    add, mul = zn_tables(4)
    mul[2][2] = 1
    with pytest.raises(RingConstructionError):
        table_ring(add, mul)
    # Validate directly on an unvalidated handle carrying the bad table.
    from ringlab.core import TableRing

    broken = TableRing(np.array(add), np.array(mul), 0, 1)
    report = validate_axioms(broken)
    assert not report.ok
    assert report.axiom in (
        "mul-associativity", "left-distributivity", "right-distributivity"
    )
    assert report.witness is not None


def test_order_one_ring_admitted():
    ring = table_ring([[0]], [[0]])
    assert ring.order == 1
    assert ring.zero == ring.one == 0
    assert validate_axioms(ring).ok


def test_z2_tables():
    ring = table_ring(*zn_tables(2))
    assert ring.order == 2
    assert ring.one == 1


def test_klein_four_zero_products_lacks_identity():
    add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    mul = [[0] * 4 for _ in range(4)]
    with pytest.raises(RingConstructionError, match="identity"):
        table_ring(add, mul)


def test_dimension_mismatch():
    add, mul = zn_tables(3)
    with pytest.raises(RingConstructionError, match="mismatch"):
        table_ring(add, [row[:2] for row in mul[:2]])


def test_f4_from_raw_tables_every_nonzero_invertible():
    # Tables of GF(4) built from x^2 + x + 1, elements 0,1,w,w+1.
    # Computed by hand: w^2 = w + 1.
    add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
    ring = table_ring(add, mul)
    inv = naive_units(ring)
    assert set(inv) == {1, 2, 3}


def test_accessor_examples():
    z4 = zn(4)
    assert z4.add(3, 3) == 2
    assert z4.mul(2, 2) == 0
    z6 = zn(6)
    assert z6.mul(3, 4) == 0
    assert z6.sub(1, 3) == 4
    assert z6.neg(2) == 4


def test_one_sided_inverses_are_two_sided(small_catalog):
    for entry in small_catalog:
        ring = entry.ring
        for a in ring.elements():
            for b in ring.elements():
                if ring.mul(a, b) == ring.one:
                    assert ring.mul(b, a) == ring.one, (entry.name, a, b)


def test_lazy_ring_matches_dense():
    dense = zn(30)
    lazy = zn(30, threshold=8)
    assert isinstance(lazy, LazyRing)
    assert lazy.order == 30
    for a in (0, 1, 7, 29):
        assert (lazy.add_row(a) == dense.add_row(a)).all()
        assert (lazy.mul_row(a) == dense.mul_row(a)).all()
    assert (lazy.neg_table == dense.neg_table).all()
    report = validate_axioms(lazy, limit=8, force=True)
    assert report.ok
    assert report.mode == "sampled"


def test_validate_limit_requires_force():
    ring = zn(20)
    with pytest.raises(AxiomCheckLimitError):
        validate_axioms(ring, limit=10)
    assert validate_axioms(ring, limit=10, force=True).ok


def test_labels_roundtrip(t2z2):
    for a in t2z2.elements():
        assert t2z2.id_of(t2z2.label_of(a)) == a


def test_elementset_mask_roundtrip(z4):
    from ringlab import ElementSet

    s = ElementSet(z4, frozenset({1, 3}))
    assert s.mask().tolist() == [False, True, False, True]
    assert ElementSet.from_mask(z4, s.mask()) == s
    assert len(s) == 2 and list(s) == [1, 3]
    with pytest.raises(ValueError):
        ElementSet(z4, frozenset({9}))
