import random
from fractions import Fraction

import pytest

from genusonedivisors.class_algebra import canonical_class, delta_irr_class
from genusonedivisors.errors import InvalidDimensionException, NotSymmetricException
from genusonedivisors.hain_divisor import hain_class
from genusonedivisors.models import DivisorClass, SymCurveClass, SymDivisorClass
from genusonedivisors.models.constants import BOUNDARY_EXEMPTION_CAVEAT
from genusonedivisors.sym_quotient import (
    average_over_relabelings,
    boundary_cone_member,
    certificate_curves,
    nonboundary_constraints_check,
    symmetrize,
)

SEED = 12


def test_symmetrize_canonical_class():
    assert symmetrize(canonical_class(4)) == SymDivisorClass.from_coordinates(4, [Fraction(-7, 12), 0, 1, 2])
    assert symmetrize(delta_irr_class(5)) == SymDivisorClass(5, 1)


def test_symmetrize_rejects_non_symmetric():
    with pytest.raises(NotSymmetricException):
        symmetrize(hain_class((1, 1, -2)))


def test_average_over_relabelings():
    average = average_over_relabelings(hain_class((1, 1, -2)))
    assert average == DivisorClass.from_subsets(3, 2, {(1, 2): 1, (1, 3): 1, (2, 3): 1, (1, 2, 3): 2})
    assert symmetrize(average) == SymDivisorClass.from_coordinates(3, [Fraction(1, 6), 1, 2])


def test_average_fixes_symmetric_classes():
    canonical = canonical_class(5)
    assert average_over_relabelings(canonical) == canonical


def test_boundary_cone_member():
    assert boundary_cone_member(SymDivisorClass(4, 1, {3: 2}))
    assert not boundary_cone_member(symmetrize(canonical_class(4)))


def test_certificate_curves():
    curves = certificate_curves(3)
    assert curves == [
        SymCurveClass("C", 3, 0, {2: 2}),
        SymCurveClass("C_2", 3, 0, {2: -1, 3: 1}),
        SymCurveClass("C_3", 3, 12, {3: -1}),
    ]


def test_certificate_curves_higher_genus():
    curves = certificate_curves(4, g=2)
    assert [curve.name for curve in curves] == ["C_2", "C_3"]
    assert curves[0].pairings == {2: -4, 3: 2}
    assert curves[1].pairings == {3: -3, 4: 1}


def test_certificate_curves_errors():
    with pytest.raises(InvalidDimensionException):
        certificate_curves(1)
    with pytest.raises(InvalidDimensionException):
        certificate_curves(4, g=-1)


def test_canonical_class_fails_only_the_last_curve():
    report = nonboundary_constraints_check(symmetrize(canonical_class(5)))
    assert report.failing_curves() == ("C_5",)
    assert not report.all_nonnegative
    assert not report.chain_holds
    assert dict(report.chain)["12·a_irr >= b_5"] is False
    assert not report.is_boundary_divisor


def test_boundary_divisor_is_exempt():
    report = nonboundary_constraints_check(SymDivisorClass(4, 0, {2: 1}))
    assert report.failing_curves() == ("C_2",)
    assert report.is_boundary_divisor
    assert report.caveat == BOUNDARY_EXEMPTION_CAVEAT


def test_constraints_satisfied():
    report = nonboundary_constraints_check(SymDivisorClass.from_coordinates(4, [1, 1, 1, 1]))
    assert report.all_nonnegative
    assert report.chain_holds
    assert report.failing_curves() == ()
    data = report.to_dict()
    assert data["n"] == 4
    assert data["g"] == 1
    assert [entry["curve"] for entry in data["pairings"]] == ["C", "C_2", "C_3", "C_4"]
    assert data["pairings"][0]["value"] == "3/1"


def test_chain_matches_pairings():
    rng = random.Random(SEED)
    for _ in range(500):
        n = rng.randint(2, 7)
        coordinates = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)]
        divisor = SymDivisorClass.from_coordinates(n, coordinates)
        report = nonboundary_constraints_check(divisor)
        assert report.chain_holds == report.all_nonnegative
        for g in (0, 2, 3):
            if n >= 3:
                other = nonboundary_constraints_check(divisor, g=g)
                assert other.chain_holds == other.all_nonnegative
