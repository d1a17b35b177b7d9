import json

import pytest

from kgunits.algebra import Algebra
from kgunits.fields import make_field
from kgunits.groups import group_by_label
from kgunits.isoprobe import (Inconclusive, InvariantBundle, Isomorphic,
                              NotIsomorphic, bundle, compare_unit_groups,
                              decide, explicit_isomorphism,
                              scan_minimum_counterexample)
from kgunits.units import UnitGroup


def _alg(p, k, label):
    return Algebra(make_field(p, k), group_by_label(label))


def test_frozen_bundles_for_the_order_256_rivals():
    assert bundle(_alg(2, 1, "D8")) == InvariantBundle(
        size=256, field=(2, 1), commutative=False, unit_count=128,
        unit_order_spectrum=((1, 1), (2, 47), (4, 80)),
        idempotent_count=2, nilpotent_count=128, square_zero_count=48,
        center_dimension=5)
    assert bundle(_alg(2, 1, "Q8")) == InvariantBundle(
        size=256, field=(2, 1), commutative=False, unit_count=128,
        unit_order_spectrum=((1, 1), (2, 15), (4, 112)),
        idempotent_count=2, nilpotent_count=128, square_zero_count=16,
        center_dimension=5)


def test_bundle_is_deterministic_and_serializable():
    b1 = bundle(_alg(3, 1, "C4"))
    b2 = bundle(_alg(3, 1, "C4"))
    assert b1 == b2
    json.dumps(b1.as_dict())


def test_decide_preconditions():
    with pytest.raises(ValueError):
        decide(_alg(2, 1, "C4"), _alg(3, 1, "C4"))
    with pytest.raises(ValueError):
        decide(_alg(2, 1, "C4"), _alg(2, 1, "C8"))


def test_decide_distinguishes_by_invariants():
    v = decide(_alg(2, 1, "C8"), _alg(2, 1, "C4xC2"))
    assert isinstance(v, NotIsomorphic)
    assert v.invariant == "unit_order_spectrum"
    v = decide(_alg(3, 1, "C4"), _alg(3, 1, "C2xC2"))
    assert isinstance(v, NotIsomorphic)
    assert v.invariant == "unit_count"
    assert v.values == (32, 16)
    v = decide(_alg(2, 1, "D8"), _alg(2, 1, "Q8"))
    assert isinstance(v, NotIsomorphic)
    assert v.invariant == "unit_order_spectrum"


def test_decide_certifies_the_order_625_pair():
    a = _alg(5, 1, "C4")
    b = _alg(5, 1, "C2xC2")
    v = decide(a, b)
    assert isinstance(v, Isomorphic)
    w = v.witness
    assert (w.source_label, w.target_label) == ("F5C4", "F5C2xC2")
    assert w.checksum() == "ce8efdaedf605a72"
    # independently re-verify multiplicativity on every basis product
    basis = [a.basis_element(i) for i in range(a.group.order)]
    for x in basis:
        for y in basis:
            assert w.apply(x * y) == w.apply(x) * w.apply(y)
    assert w.apply(a.one()) == b.one()
    # and it is injective on the basis
    assert len({w.apply(x).key() for x in basis}) == 4


def test_decide_is_symmetric_in_verdict():
    a = _alg(5, 1, "C4")
    b = _alg(5, 1, "C2xC2")
    forward = decide(a, b)
    backward = decide(b, a)
    assert isinstance(forward, Isomorphic) and isinstance(backward, Isomorphic)
    assert backward.witness.source_label == "F5C2xC2"
    assert decide(_alg(2, 1, "C8"), _alg(2, 1, "C4xC2")).kind == \
        decide(_alg(2, 1, "C4xC2"), _alg(2, 1, "C8")).kind == "not_isomorphic"


def test_explicit_isomorphism_requires_matching_decompositions():
    with pytest.raises(ValueError):
        explicit_isomorphism(_alg(3, 1, "C4"), _alg(3, 1, "C2xC2"))


def test_explicit_isomorphism_handles_extension_field_blocks():
    # F2C3 = F2 + F4 exercises the degree > 1 block-matching path
    a = _alg(2, 1, "C3")
    w = explicit_isomorphism(a, a)
    assert w.checksum() == "c76c0625612c0842"
    basis = [a.basis_element(i) for i in range(a.group.order)]
    for x in basis:
        for y in basis:
            assert w.apply(x * y) == w.apply(x) * w.apply(y)


def test_scan_report(scan_report):
    r = scan_report
    assert r.bound == 1024
    assert r.pair_count == r.expected_pair_count == 17
    assert r.inconclusive == ()
    assert r.minimum is not None
    assert r.minimum.size == 625
    assert r.minimum.field == "F5"
    assert {r.minimum.group_a, r.minimum.group_b} == {"C4", "C2xC2"}
    assert r.headline() == "minimum isomorphic pair: F5 C4 ~ C2xC2 at size 625"
    sizes = [row.size for row in r.rows]
    assert sizes == sorted(sizes)
    below = [row for row in r.rows if row.size < 625]
    assert len(below) == 15
    assert all(row.verdict == "not_isomorphic" for row in below)
    assert sum(1 for row in r.rows if row.verdict == "isomorphic") == 1
    json.dumps(r.as_dict())


def test_scan_parallel_agrees_with_sequential(scan_report):
    parallel = scan_minimum_counterexample(1024, jobs=2)
    assert parallel.as_dict() == scan_report.as_dict()


def test_scan_below_the_minimum_finds_nothing():
    r = scan_minimum_counterexample(600)
    assert r.minimum is None
    assert r.headline() == "no isomorphic pair below 600"


def test_compare_unit_groups_branches():
    d8 = UnitGroup(_alg(2, 1, "D8"))
    q8 = UnitGroup(_alg(2, 1, "Q8"))
    c = compare_unit_groups(d8, q8)
    assert c.verdict == "not isomorphic (element order spectra differ)"
    a = UnitGroup(_alg(5, 1, "C4"))
    b = UnitGroup(_alg(5, 1, "C2xC2"))
    assert compare_unit_groups(a, b).verdict == "isomorphic (equal abelian invariants)"
    small = UnitGroup(_alg(2, 1, "C2"))
    big = UnitGroup(_alg(2, 1, "C4"))
    assert compare_unit_groups(small, big).verdict == "not isomorphic (orders differ)"
    json.dumps(compare_unit_groups(d8, q8).as_dict())
