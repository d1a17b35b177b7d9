from math import lcm

import pytest

from kgunits.algebra import Algebra
from kgunits.fields import make_field
from kgunits.groups import group_by_label
from kgunits.units import (AbelianType, UnitGroup, partition_from_power_counts,
                           structure_string)


def _units(p, k, label):
    return UnitGroup(Algebra(make_field(p, k), group_by_label(label)))


# U(F_{p^k} C_p^n) for every modular elementary abelian case under the size cap
ELEMENTARY_ABELIAN_CASES = [
    (2, 1, 1), (2, 1, 2), (2, 1, 3),
    (2, 2, 1), (2, 2, 2),
    (2, 3, 1), (2, 4, 1),
    (3, 1, 1), (3, 2, 1),
]


def _elementary_label(p: int, n: int) -> str:
    if n == 1:
        return f"C{p}"
    if n == 2:
        return f"C{p}xC{p}"
    return f"C{p}^{n}"


@pytest.mark.parametrize("p,k,n", ELEMENTARY_ABELIAN_CASES)
def test_elementary_abelian_unit_groups(p, k, n):
    # brute enumeration must agree with C_p^(k p^n - k) x C_{p^k - 1}
    u = _units(p, k, _elementary_label(p, n))
    q = p ** k
    copies = k * p ** n - k
    want = AbelianType.from_cyclic_orders([p] * copies + [q - 1])
    assert u.abelian_invariants() == want
    assert u.order == p ** copies * (q - 1)


def test_partition_from_power_counts():
    # C4 x C2: counts of x with x^(2^i) = 1 are 1, 4, 8
    assert partition_from_power_counts(2, [1, 4, 8]) == (2, 1)
    # C2^3
    assert partition_from_power_counts(2, [1, 8, 8, 8]) == (1, 1, 1)
    # C9
    assert partition_from_power_counts(3, [1, 3, 9]) == (2,)
    assert partition_from_power_counts(2, [1]) == ()
    with pytest.raises(ValueError):
        partition_from_power_counts(2, [1, 4, 2])
    with pytest.raises(ValueError):
        partition_from_power_counts(2, [1, 3])


def test_abelian_type_composite_and_primary_agree():
    a = AbelianType.from_cyclic_orders([6, 4])
    b = AbelianType.from_primary({2: (2, 1), 3: (1,)})
    assert a == b
    assert a.render() == "C2 x C4 x C3"
    assert a.order() == 24
    assert a.exponent() == 12
    assert AbelianType.from_cyclic_orders([1]).render() == "C1"
    assert AbelianType.from_cyclic_orders([15]).render() == "C3 x C5"
    with pytest.raises(ValueError):
        AbelianType.from_cyclic_orders([0])


def test_frozen_unit_order_spectra():
    assert _units(2, 1, "C8").unit_order_spectrum() == {1: 1, 2: 15, 4: 48, 8: 64}
    assert _units(2, 2, "C4").unit_order_spectrum() == {
        1: 1, 2: 15, 3: 2, 4: 48, 6: 30, 12: 96}
    assert _units(2, 1, "C4xC2").unit_order_spectrum() == {1: 1, 2: 63, 4: 64}


def test_counts_of_units_of_order_at_most_two():
    def n_le_2(u):
        spec = u.unit_order_spectrum()
        return spec.get(1, 0) + spec.get(2, 0)

    assert n_le_2(_units(2, 1, "C4xC2")) == 64
    assert n_le_2(_units(2, 1, "C8")) == 16
    assert n_le_2(_units(2, 2, "C4")) == 16


def test_abelian_invariants_reject_nonabelian():
    with pytest.raises(ValueError):
        _units(2, 1, "D6").abelian_invariants()


def test_recognize_dihedral():
    u = _units(2, 1, "D6")
    found, witness = u.recognize_dihedral()
    assert found
    r, s = witness
    assert u.element_order(r) == 6
    assert u.element_order(s) == 2
    assert s * r * s == r.try_inverse()

    found, witness = _units(2, 1, "D8").recognize_dihedral()
    assert not found and witness is None

    with pytest.raises(ValueError):
        _units(2, 1, "C2").recognize_dihedral()


def test_element_order_brute_cross_check():
    u = _units(5, 1, "C2")
    one = u.algebra.one()
    for el in u.units:
        o = 1
        acc = el
        while acc != one:
            acc = acc * el
            o += 1
        assert u.element_order(el) == o


def test_closure_sizes():
    u = _units(2, 1, "D6")
    found, (r, s) = u.recognize_dihedral()
    assert u.closure([r]) == 6
    assert u.closure([s]) == 2
    assert u.closure([r, s]) == 12
    assert u.closure([]) == 1
    with pytest.raises(ValueError):
        u.closure([u.algebra.zero()])


def test_exponent_is_lcm_of_spectrum():
    for p, k, label in ((2, 1, "C6"), (2, 2, "C4"), (3, 1, "D6")):
        u = _units(p, k, label)
        assert u.exponent() == lcm(*u.unit_order_spectrum())


def test_verify_presentation_generators():
    # U(F2C3) = C3, generated by the group element x with relator x^3
    u = _units(2, 1, "C3")
    x = u.algebra.group_element("x")
    assert u.order == 3
    assert u.verify_presentation_generators([x], [(1, 1, 1)]) is True
    # a relator the image violates
    assert u.verify_presentation_generators([x], [(1, 1)]) is False
    # relators hold but the image fails to generate
    assert u.verify_presentation_generators([u.algebra.one()], [(1,)]) is False
    with pytest.raises(ValueError):
        u.verify_presentation_generators([u.algebra.zero()], [(1,)])


def test_structure_string_grammar():
    assert structure_string("abelian", AbelianType.from_cyclic_orders([4, 2])) == "C2 x C4"
    assert structure_string("dihedral", 12) == "D12"
    assert structure_string("presented", "order 324, 3 generators") == \
        "presented(order 324, 3 generators)"
    assert structure_string("unclassified", 7) == "unclassified(order=7)"
    with pytest.raises(ValueError):
        structure_string("mystery", 1)
