import os
from fractions import Fraction
from unittest import mock

import pytest

from genusonedivisors.class_algebra import (
    are_proportional,
    boundary_class,
    canonical_class,
    delta_irr_class,
    lambda_class,
    pair,
    psi_class,
    ray_representative,
    relabel,
)
from genusonedivisors.errors import (
    DimensionMismatchException,
    InvalidDimensionException,
    InvalidLabelException,
)
from genusonedivisors.models import CurveClass, DivisorClass, Permutation
from genusonedivisors.models.constants import MAX_POINTS_ENV_VARIABLE

X_CURVE_112 = CurveClass.from_subsets(3, 0, {(1, 2): 3, (1, 3): 0, (2, 3): 0, (1, 2, 3): 1})


def test_delta_irr_is_twelve_lambda():
    assert delta_irr_class(4) == 12 * lambda_class(4)


def test_psi_class():
    psi = psi_class(3, 1)
    assert psi == DivisorClass.from_subsets(3, 1, {(1, 2): 1, (1, 3): 1, (1, 2, 3): 1})


def test_psi_class_label_out_of_range():
    with pytest.raises(InvalidLabelException):
        psi_class(3, 4)


def test_canonical_class():
    assert canonical_class(3) == DivisorClass.from_subsets(3, -8, {(1, 2, 3): 1})

    canonical = canonical_class(4)
    assert canonical.lambda_coeff == -7
    assert canonical.coefficient((1, 2)) == 0
    assert canonical.coefficient((2, 3, 4)) == 1
    assert canonical.coefficient((1, 2, 3, 4)) == 2


def test_invalid_point_count():
    with pytest.raises(InvalidDimensionException):
        lambda_class(0)
    with pytest.raises(InvalidDimensionException):
        canonical_class(-2)


def test_point_count_cap_from_environment():
    with mock.patch.dict(os.environ, {MAX_POINTS_ENV_VARIABLE: "3"}):
        assert lambda_class(3).n == 3
        with pytest.raises(InvalidDimensionException):
            lambda_class(4)


def test_boundary_class_rejects_small_subsets():
    with pytest.raises(InvalidLabelException):
        boundary_class(3, (2,))


def test_pair():
    assert pair(X_CURVE_112, boundary_class(3, (1, 2))) == 3
    assert pair(X_CURVE_112, boundary_class(3, (1, 3))) == 0
    assert pair(X_CURVE_112, delta_irr_class(3)) == 0
    assert pair(X_CURVE_112, DivisorClass.zero(3)) == 0


def test_pair_dimension_mismatch():
    with pytest.raises(DimensionMismatchException):
        pair(X_CURVE_112, lambda_class(4))


def test_pair_is_linear():
    first = DivisorClass.from_subsets(3, 2, {(1, 2): Fraction(1, 2), (1, 2, 3): -1})
    second = DivisorClass.from_subsets(3, -1, {(1, 2): 3, (2, 3): 5})
    assert pair(X_CURVE_112, 3 * first - second) == 3 * pair(X_CURVE_112, first) - pair(X_CURVE_112, second)


def test_relabel():
    p = Permutation.transposition(3, 1, 2)
    assert relabel(p, boundary_class(3, (1, 3))) == boundary_class(3, (2, 3))
    assert relabel(p, lambda_class(3)) == lambda_class(3)
    assert relabel(p, X_CURVE_112) == X_CURVE_112


def test_relabel_size_mismatch():
    with pytest.raises(DimensionMismatchException):
        relabel(Permutation.identity(4), lambda_class(3))


def test_are_proportional():
    divisor = DivisorClass.from_subsets(3, 2, {(1, 3): 1, (2, 3): Fraction(-2, 3)})
    assert are_proportional(divisor, Fraction(-5, 7) * divisor)
    assert not are_proportional(divisor, divisor + lambda_class(3))
    assert not are_proportional(divisor, DivisorClass.zero(3))
    assert are_proportional(DivisorClass.zero(3), DivisorClass.zero(3))


def test_ray_representative():
    divisor = DivisorClass.from_subsets(3, 6, {(1, 2): 6, (1, 3): 3, (2, 3): -2, (1, 2, 3): 6})
    ray = ray_representative(divisor)
    assert ray.lambda_coeff == 1
    assert ray.coefficient((1, 3)) == Fraction(1, 2)
    assert ray_representative(-divisor) == -ray
    assert ray_representative(boundary_class(3, (2, 3)) * 4) == boundary_class(3, (2, 3))


def test_to_str():
    divisor = DivisorClass.from_subsets(3, 2, {(1, 2): -1, (1, 3): 2, (2, 3): Fraction(1, 2)})
    assert divisor.to_str() == "2λ − δ{1,2} + 2δ{1,3} + (1/2)δ{2,3}"
    assert DivisorClass.zero(3).to_str() == "0"


def test_to_dict():
    divisor = DivisorClass.from_subsets(3, 0, {(1, 2, 3): Fraction(-3, 4)})
    assert divisor.to_dict() == {"n": 3, "lambda": "0/1", "boundary": [{"S": [1, 2, 3], "c": "-3/4"}]}
    assert DivisorClass.from_dict(divisor.to_dict()) == divisor


def test_float_coefficients_are_rejected():
    with pytest.raises(ValueError):
        DivisorClass(3, 0.5)


def test_small_cases():
    assert psi_class(2, 1) == DivisorClass.from_subsets(2, 1, {(1, 2): 1})
    assert canonical_class(2) == lambda_class(2) * -9
    assert canonical_class(11).lambda_coeff == 0
    assert delta_irr_class(1) == DivisorClass(1, 12)


def test_relabel_is_group_action():
    p = Permutation((2, 3, 1, 4))
    q = Permutation((4, 1, 3, 2))
    divisor = DivisorClass.from_subsets(4, 1, {(1, 2): 3, (2, 3, 4): Fraction(-1, 2), (1, 4): 7})
    assert relabel(p.compose(q), divisor) == relabel(p, relabel(q, divisor))
    assert relabel(Permutation.identity(4), divisor) == divisor
    assert relabel(Permutation.transposition(3, 1, 2), psi_class(3, 2)) == psi_class(3, 1)
