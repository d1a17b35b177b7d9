import pytest

from kgunits.groups import (cyclic, dihedral, direct_product, group_by_label,
                            groups_of_order, groups_up_to_order,
                            isomorphic_by_search, quaternion8,
                            small_group_isomorphic)

CANONICAL_LABELS = [
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "D6", "C7",
    "C8", "C4xC2", "C2^3", "D8", "Q8", "C9", "C3xC3",
]


def test_catalog_of_groups_is_frozen():
    assert [g.label for g in groups_up_to_order(9)] == CANONICAL_LABELS
    counts = {n: len(groups_of_order(n)) for n in range(1, 10)}
    assert counts == {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2}


def test_group_by_label():
    assert group_by_label("Q8").order == 8
    assert group_by_label("C3xC3").order == 9
    with pytest.raises(KeyError):
        group_by_label("C10")


def test_group_axioms_hold_everywhere():
    for g in groups_up_to_order(9):
        n = g.order
        for a in range(n):
            assert g.mul(a, g.inv(a)) == 0
            assert g.mul(0, a) == a and g.mul(a, 0) == a
        for a in range(n):
            for b in range(n):
                for c in range(min(n, 4)):
                    assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


def test_order_spectra():
    assert group_by_label("D6").order_spectrum() == {1: 1, 2: 3, 3: 2}
    assert group_by_label("Q8").order_spectrum() == {1: 1, 2: 1, 4: 6}
    assert group_by_label("D8").order_spectrum() == {1: 1, 2: 5, 4: 2}
    assert group_by_label("C2xC2").order_spectrum() == {1: 1, 2: 3}
    assert group_by_label("C8").order_spectrum() == {1: 1, 2: 1, 4: 2, 8: 4}


def test_exponent_and_commutativity():
    assert group_by_label("C4xC2").exponent() == 4
    assert group_by_label("C3xC3").exponent() == 3
    assert group_by_label("D8").exponent() == 4
    assert not group_by_label("D6").is_abelian()
    assert group_by_label("C6").is_abelian()


def test_direct_product_shape():
    g = direct_product(cyclic(4), cyclic(2))
    assert g.order == 8 and g.is_abelian()
    assert g.order_spectrum() == group_by_label("C4xC2").order_spectrum()


def test_dihedral_and_quaternion():
    d = dihedral(8)
    assert d.order == 8 and not d.is_abelian()
    q = quaternion8()
    assert sum(1 for a in range(8) if q.element_order(a) == 2) == 1
    with pytest.raises(ValueError):
        dihedral(5)


def test_isomorphism_test_is_complete_up_to_nine():
    groups = groups_up_to_order(9)
    for a in groups:
        for b in groups:
            fast = small_group_isomorphic(a, b)
            assert fast == isomorphic_by_search(a, b)
            assert fast == (a.label == b.label)
