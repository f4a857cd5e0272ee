import random
from fractions import Fraction
from math import gcd

import pytest

from genusonedivisors.certificates import (
    HAIN_IRREDUCIBLE_SOURCE,
    X_CURVE_MOVING_SOURCE,
    certify_extremal,
    certify_hain,
    extremal_ray_family,
    ray_class,
    x_curve,
)
from genusonedivisors.class_algebra import are_proportional, lambda_class, pair
from genusonedivisors.errors import (
    DimensionMismatchException,
    InvalidDimensionException,
    NotPositiveException,
    ZeroEntryException,
)
from genusonedivisors.hain_divisor import hain_class
from genusonedivisors.models import CertificateReport, CurveClass, DivisorClass, Signature
from genusonedivisors.models.certificate_report import INVALID, IRREDUCIBLE_DIVISOR, MOVING_CURVE, VALID

SEED = 31


def test_x_curve():
    assert x_curve((1, 1, -2)) == CurveClass.from_subsets(3, 0, {(1, 2): 3, (1, 2, 3): 1})
    assert x_curve((3, -2, -1)) == CurveClass.from_subsets(3, 0, {(1, 3): 3, (2, 3): 8, (1, 2, 3): 1})


def test_x_curve_errors():
    with pytest.raises(InvalidDimensionException):
        x_curve((1, 1, 1, -3))
    with pytest.raises(ZeroEntryException):
        x_curve((2, 0, -2))


def test_x_curve_pairs_to_minus_one():
    rng = random.Random(SEED)
    for _ in range(200):
        a1, a2 = rng.randint(-20, 20), rng.randint(-20, 20)
        if 0 in (a1, a2, a1 + a2):
            continue
        a = Signature((a1, a2, -a1 - a2))
        assert pair(x_curve(a), hain_class(a)) == -1


def test_certify_hain():
    report = certify_hain((1, 1, -2))
    assert report.pairing == -1
    assert report.verdict == VALID
    assert report.is_valid
    assert report.has_assumption(IRREDUCIBLE_DIVISOR)
    assert report.has_assumption(MOVING_CURVE)
    assert report.divisor == hain_class((1, 1, -2))
    assert report.base_divisor is None


def test_certify_hain_non_primitive_is_invalid():
    report = certify_hain((2, 2, -4))
    assert report.pairing == -1
    assert report.verdict == INVALID
    assert not report.has_assumption(IRREDUCIBLE_DIVISOR)


def test_certify_extremal_requires_both_assumptions():
    divisor = hain_class((1, 1, -2))
    curve = x_curve((1, 1, -2))
    assert certify_extremal(divisor, curve).verdict == INVALID
    assert certify_extremal(divisor, curve, irreducible=HAIN_IRREDUCIBLE_SOURCE).verdict == INVALID
    assert certify_extremal(divisor, curve, moving=X_CURVE_MOVING_SOURCE).verdict == INVALID
    assert certify_extremal(divisor, curve, HAIN_IRREDUCIBLE_SOURCE, X_CURVE_MOVING_SOURCE).verdict == VALID


def test_certify_extremal_nonnegative_pairing_is_invalid():
    report = certify_extremal(lambda_class(3), x_curve((1, 1, -2)), HAIN_IRREDUCIBLE_SOURCE, X_CURVE_MOVING_SOURCE)
    assert report.pairing == 0
    assert report.verdict == INVALID


def test_certificate_report_to_dict():
    report = certify_hain((3, -2, -1))
    data = report.to_dict()
    assert data["pairing"] == "-1/1"
    assert data["verdict"] == VALID
    assert [entry["tag"] for entry in data["assumptions"]] == [IRREDUCIBLE_DIVISOR, MOVING_CURVE]
    assert CertificateReport.from_dict(data) == report


@pytest.mark.parametrize("k, factor", [(1, 2), (2, 6), (3, 12), (10, 110)])
def test_extremal_ray_family(k, factor):
    signature, divisor, ray = extremal_ray_family(k)
    assert signature.entries == (k + 1, -k, -1)
    assert divisor == factor * ray
    assert ray == ray_class(k)


def test_extremal_rays_are_distinct():
    rays = [extremal_ray_family(k)[2] for k in range(1, 8)]
    for index, first in enumerate(rays):
        for second in rays[index + 1:]:
            assert not are_proportional(first, second)


def test_extremal_ray_family_rejects_nonpositive():
    with pytest.raises(NotPositiveException):
        extremal_ray_family(0)
    with pytest.raises(NotPositiveException):
        extremal_ray_family(True)


def test_primitive_certificates_are_valid():
    for a1 in range(1, 12):
        for a2 in range(-11, 12):
            if a2 == 0 or a1 + a2 == 0:
                continue
            report = certify_hain((a1, a2, -a1 - a2))
            assert report.is_valid == (gcd(a1, a2) == 1)


def test_x_curve_for_two_minus_one_minus_one():
    assert x_curve((2, -1, -1)) == CurveClass.from_subsets(3, 0, {(2, 3): 3, (1, 2, 3): 1})


def test_certify_extremal_against_boundary_and_zero():
    curve = x_curve((1, 1, -2))
    boundary = certify_extremal(DivisorClass.from_subsets(3, 0, {(1, 2): 1}), curve,
                                HAIN_IRREDUCIBLE_SOURCE, X_CURVE_MOVING_SOURCE)
    assert boundary.pairing == 3
    assert boundary.verdict == INVALID
    assert certify_extremal(DivisorClass.zero(3), curve, HAIN_IRREDUCIBLE_SOURCE, X_CURVE_MOVING_SOURCE).pairing == 0


def test_certify_extremal_is_scale_invariant():
    divisor = hain_class((3, -2, -1))
    curve = x_curve((3, -2, -1))
    for scale in (Fraction(1, 7), 1, 5):
        report = certify_extremal(scale * divisor, curve, HAIN_IRREDUCIBLE_SOURCE, X_CURVE_MOVING_SOURCE)
        assert report.verdict == VALID


def test_certify_extremal_dimension_mismatch():
    with pytest.raises(DimensionMismatchException):
        certify_extremal(lambda_class(4), x_curve((1, 1, -2)))
