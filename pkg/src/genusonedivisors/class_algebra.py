"""Exact linear algebra of divisor and curve classes on the n-pointed
genus-one moduli space.

The rational Picard group is spanned by λ and the δ_{0;S} with |S| >= 2.
δ_irr = 12λ and ψ_i = λ + Σ_{i∈S} δ_{0;S} are expressed in that basis.
"""
from fractions import Fraction
from typing import Iterable, Optional, TypeVar

from genusonedivisors.errors import DimensionMismatchException, InvalidLabelException
from genusonedivisors.models import CurveClass, DivisorClass, Permutation
from genusonedivisors.models.boundary_vector import SparseBoundaryVector, check_point_count
from genusonedivisors.utils import boundary_masks, popcount

Vector = TypeVar("Vector", bound=SparseBoundaryVector)


def lambda_class(n: int) -> DivisorClass:
    return DivisorClass(n, 1)


def delta_irr_class(n: int) -> DivisorClass:
    """δ_irr, which equals 12λ"""
    check_point_count(n)
    return DivisorClass(n, 12)


def boundary_class(n: int, labels: Iterable[int]) -> DivisorClass:
    """The basis class δ_{0;S}"""
    return DivisorClass.from_subsets(n, 0, {tuple(labels): 1})


def psi_class(n: int, i: int) -> DivisorClass:
    """ψ_i = λ + Σ_{i∈S} δ_{0;S}

    Raises:
        InvalidDimensionException: n is not a positive integer
        InvalidLabelException: i is outside 1..n
    """
    check_point_count(n)
    if not 1 <= i <= n:
        raise InvalidLabelException(f"label {i} is out of range 1..{n}")
    bit = 1 << (i - 1)
    return DivisorClass(n, 1, {mask: 1 for mask in boundary_masks(n) if mask & bit}, validate=False)


def canonical_class(n: int) -> DivisorClass:
    """K = (n - 11)λ + Σ_{|S|>=2} (|S| - 2) δ_{0;S}"""
    check_point_count(n)
    return DivisorClass(n, n - 11, {mask: popcount(mask) - 2 for mask in boundary_masks(n)}, validate=False)


def pair(curve: CurveClass, divisor: DivisorClass) -> Fraction:
    """Intersection number C·D as the dot product over the shared basis

    Raises:
        DimensionMismatchException: C and D live on different moduli spaces
    """
    if curve.n != divisor.n:
        raise DimensionMismatchException(f"curve on {curve.n} points paired with a divisor on {divisor.n} points")
    total = curve.lambda_pairing * divisor.lambda_coeff
    small, large = curve, divisor
    if len(curve.boundary_pairings) > len(divisor.boundary_coeffs):
        small, large = divisor, curve
    for mask, value in small.boundary_items():
        other = large.coefficient(mask)
        if other:
            total += value * other
    return total


def relabel(p: Permutation, vector: Vector) -> Vector:
    """Move the coefficient of δ_{0;S} to δ_{0;p(S)}; λ is fixed"""
    if p.n != vector.n:
        raise DimensionMismatchException(f"permutation of {p.n} labels applied to a class on {vector.n} points")
    moved = {p.apply_to_mask(mask): value for mask, value in vector.boundary_items()}
    return type(vector)(vector.n, vector.lambda_value, moved, validate=False)


def _coordinates(vector: SparseBoundaryVector):
    yield -1, vector.lambda_value
    for mask, value in vector.boundary_items():
        yield mask, value


def are_proportional(first: SparseBoundaryVector, second: SparseBoundaryVector) -> bool:
    """True when one class is a rational multiple of the other

    The zero class is proportional only to itself.
    """
    if first.n != second.n:
        raise DimensionMismatchException(f"cannot compare classes on {first.n} and {second.n} points")
    if first.is_zero() or second.is_zero():
        return first.is_zero() and second.is_zero()
    left = dict(_coordinates(first))
    right = dict(_coordinates(second))
    keys = {key for key, value in left.items() if value} | {key for key, value in right.items() if value}
    pivot = next(iter(sorted(keys)))
    left_pivot = left.get(pivot, Fraction(0))
    right_pivot = right.get(pivot, Fraction(0))
    if not left_pivot or not right_pivot:
        return False
    return all(left.get(key, 0) * right_pivot == right.get(key, 0) * left_pivot for key in keys)


def ray_representative(divisor: DivisorClass) -> DivisorClass:
    """Positive rescaling whose first nonzero coefficient, in the order
    λ then subsets by (size, lex), has absolute value one
    """
    if divisor.is_zero():
        return divisor
    leading: Optional[Fraction] = divisor.lambda_coeff or None
    if leading is None:
        leading = next(value for _, value in divisor.boundary_items())
    return divisor * (1 / abs(leading))

