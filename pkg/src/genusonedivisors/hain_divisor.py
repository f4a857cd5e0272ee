"""The Hain divisor D_a of a signature a: its class, its degree on a
one-parameter family, its irreducible components and their classes.
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

import numpy as np
from sympy import divisor_count, divisors, primefactors

from genusonedivisors.class_algebra import delta_irr_class, lambda_class
from genusonedivisors.errors import (
    DegenerateSignatureException,
    DimensionMismatchException,
    InternalInconsistencyException,
    InvalidLabelException,
    NotPositiveException,
    UnsupportedForTwoPointsException,
    ZeroEntryException,
)
from genusonedivisors.models import CurveClass, DivisorClass, FamilyData, FamilyInvariants, Signature
from genusonedivisors.utils import boundary_masks, full_mask, mask_to_labels

logger = logging.getLogger(__name__)

SignatureLike = Union[Signature, Iterable[int]]


def validate_signature(a: SignatureLike) -> Signature:
    """Check that a is zero-sum and not identically zero

    Raises:
        NotZeroSumException: the entries do not sum to 0
        DegenerateSignatureException: every entry is 0
    """
    if isinstance(a, Signature):
        return a
    return Signature(tuple(a))


def _pair_sum(a: Signature, mask: int) -> int:
    """Σ a_i a_j over unordered pairs {i, j} inside S"""
    total = 0
    squares = 0
    for label in mask_to_labels(mask):
        total += a[label]
        squares += a[label] * a[label]
    return (total * total - squares) // 2


def _half_square_norm(a: Signature) -> int:
    squares = sum(entry * entry for entry in a.entries)
    if squares % 2:
        raise InternalInconsistencyException(f"Σa_i² = {squares} is odd for zero-sum signature {list(a.entries)}")
    return squares // 2


def hain_class(a: SignatureLike) -> DivisorClass:
    """Class of D_a in the basis λ, δ_{0;S}

    λ has coefficient -1 + ½Σa_i². δ_{0;S} has coefficient
    -Σ_{{i,j}⊂S} a_i a_j, lowered by one more when S contains every label
    with a_i != 0, where the zero section vanishes to order one.
    """
    a = validate_signature(a)
    support = a.support_mask
    boundary = {}
    for mask in boundary_masks(a.n):
        value = -_pair_sum(a, mask)
        if mask & support == support:
            value -= 1
        if value:
            boundary[mask] = value
    divisor = DivisorClass(a.n, _half_square_norm(a) - 1, boundary)
    logger.debug("hain class of %s has %d boundary terms", list(a.entries), len(boundary))
    return divisor


def hain_zero_section_class(a: SignatureLike) -> DivisorClass:
    """D_a plus every δ_{0;S} with S ⊇ supp(a): the pulled-back zero section,
    boundary included
    """
    a = validate_signature(a)
    support = a.support_mask
    covering = {mask: 1 for mask in boundary_masks(a.n) if mask & support == support}
    return hain_class(a) + DivisorClass(a.n, 0, covering, validate=False)


def _check_label(n: int, label: int) -> None:
    if not isinstance(label, int) or not 1 <= label <= n:
        raise InvalidLabelException(f"label {label!r} is out of range 1..{n}")


def family_invariants(family: FamilyData, i: int, j: int) -> FamilyInvariants:
    """Standard intersection numbers ω², σ_i·σ_j, ω·σ_i and deg ψ_i of a family

    For i == j the self-intersection σ_i² = -deg ψ_i is reported.
    """
    _check_label(family.n, i)
    _check_label(family.n, j)
    bit_i = 1 << (i - 1)
    pair_mask = bit_i | (1 << (j - 1))
    omega_dot_sigma = Fraction(family.d_irr, 12)
    psi_degree = omega_dot_sigma + sum(count for mask, count in family.d_S.items() if mask & bit_i)
    if i == j:
        sigma_product = -psi_degree
    else:
        sigma_product = Fraction(sum(count for mask, count in family.d_S.items() if mask & pair_mask == pair_mask))
    return FamilyInvariants(
        omega_sq=Fraction(-sum(family.d_S.values())),
        sigma_i_dot_sigma_j=sigma_product,
        omega_dot_sigma_i=omega_dot_sigma,
        psi_degree_i=psi_degree,
    )


def family_curve(family: FamilyData) -> CurveClass:
    """The base curve of a family as a curve class: B·λ = d_irr/12, B·δ_{0;S} = d_S"""
    return CurveClass(family.n, Fraction(family.d_irr, 12), dict(family.d_S), validate=False)


def _check_same_points(a: Signature, family: FamilyData) -> None:
    if a.n != family.n:
        raise DimensionMismatchException(f"signature on {a.n} points used with a family on {family.n} points")


def grr_degree(a: SignatureLike, family: FamilyData) -> Fraction:
    """-(1/12)d_irr + (1/24)(Σa_i²)d_irr - Σ_S (Σ_{{i,j}⊂S} a_i a_j) d_S"""
    a = validate_signature(a)
    _check_same_points(a, family)
    degree = Fraction(-family.d_irr, 12) + Fraction(_half_square_norm(a) * family.d_irr, 12)
    for mask, count in family.d_S.items():
        degree -= _pair_sum(a, mask) * count
    return degree


def vanishing_degree(a: SignatureLike, family: FamilyData) -> int:
    """Σ d_S over S ⊇ supp(a): fibers where the zero section meets the boundary"""
    a = validate_signature(a)
    _check_same_points(a, family)
    support = a.support_mask
    return sum(count for mask, count in family.d_S.items() if mask & support == support)


def _check_positive(value: int, name: str) -> None:
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool) or value <= 0:
        raise NotPositiveException(f"{name} must be a positive integer, got {value!r}")


def eta(d: int) -> int:
    """Number of positive divisors of d"""
    _check_positive(d, "d")
    return int(divisor_count(int(d)))


def component_count(a: SignatureLike) -> int:
    """Number of irreducible components of D_a

    Zero entries are dropped first. Two remaining entries (c, -c) give
    η(|c|) - 1, so (1, -1) has no components; otherwise η(gcd).
    """
    a = validate_signature(a)
    stripped = a.stripped() if a.has_zero_entry else a
    if stripped.n < 2:
        raise DegenerateSignatureException(f"signature {list(a.entries)} has fewer than two nonzero entries")
    if stripped.n == 2:
        return eta(abs(stripped[1])) - 1
    return eta(stripped.d)


def sigma_fn(t: int) -> int:
    """σ(t) = t²∏_{p|t}(1 - 1/p²), the number of points of exact order t in (ℤ/t)²"""
    _check_positive(t, "t")
    t = int(t)
    value = Fraction(t * t)
    for prime in primefactors(t):
        value *= 1 - Fraction(1, int(prime) ** 2)
    if value.denominator != 1:
        raise InternalInconsistencyException(f"σ({t}) = {value} is not an integer")
    return value.numerator


def sigma_table(limit: int) -> np.ndarray:
    """σ(0..limit) by a multiplicative sieve; entry 0 is unused and set to 0"""
    _check_positive(limit, "limit")
    table = np.arange(limit + 1, dtype=np.int64) ** 2
    untouched = np.ones(limit + 1, dtype=bool)
    untouched[:2] = False
    for p in range(2, limit + 1):
        if not untouched[p]:
            continue
        untouched[2 * p::p] = False
        square = p * p
        table[p::p] = table[p::p] // square * (square - 1)
    return table


def divisor_sum_of_sigma(limit: int) -> np.ndarray:
    """Σ_{t|d} σ(t) for every d in 0..limit"""
    table = sigma_table(limit)
    sums = np.zeros(limit + 1, dtype=np.int64)
    for t in range(1, limit + 1):
        sums[t::t] += table[t]
    return sums


def _check_component_input(a: Signature) -> None:
    if a.n == 2:
        raise UnsupportedForTwoPointsException(
            f"component classes are only defined for n >= 3, got {list(a.entries)}"
        )
    if a.has_zero_entry:
        raise ZeroEntryException(
            f"signature {list(a.entries)} has zero entries; drop them and pull back the stripped class"
        )


def _whole_boundary(n: int) -> DivisorClass:
    return DivisorClass(n, 0, {full_mask(n): 1}, validate=False)


def component_class(a: SignatureLike) -> DivisorClass:
    """Class of the component of D_a of maximal torsion order

    ∏_{p|d}(1 - 1/p²)(D_a + λ + δ_{0;{1..n}}), or D_a itself when d = 1.
    """
    a = validate_signature(a)
    _check_component_input(a)
    divisor = hain_class(a)
    if a.is_primitive:
        return divisor
    factor = Fraction(1)
    for prime in primefactors(a.d):
        factor *= 1 - Fraction(1, int(prime) ** 2)
    return factor * (divisor + lambda_class(a.n) + _whole_boundary(a.n))


def decompose(a: SignatureLike) -> List[Tuple[int, DivisorClass]]:
    """D_a = Σ_{t|d} D′_{tb} with b = a/d, as (t, component class) pairs"""
    a = validate_signature(a)
    _check_component_input(a)
    primitive = a.scaled_down()
    pieces = [(int(t), component_class(primitive.scaled(int(t)))) for t in divisors(a.d)]
    logger.debug("decomposed %s into %d components", list(a.entries), len(pieces))
    return pieces


def component_witness(a: SignatureLike) -> List[Tuple[Fraction, str, DivisorClass]]:
    """Write the component class D′_a, d > 1, as a positive combination

    σ(d)·D_b + (σ(d)/12)·δ_irr + σ(d)·δ_{0;{1..n}} with b = a/d. The three
    summands are effective and pairwise non-proportional, so D′_a spans no
    extremal ray.

    Raises:
        DegenerateSignatureException: a is primitive, so D′_a = D_a
    """
    a = validate_signature(a)
    _check_component_input(a)
    if a.is_primitive:
        raise DegenerateSignatureException(f"signature {list(a.entries)} is primitive; D′_a = D_a has no witness")
    weight = Fraction(sigma_fn(a.d))
    primitive = a.scaled_down()
    return [
        (weight, f"D_{list(primitive.entries)}", hain_class(primitive)),
        (weight / 12, "δ_irr", delta_irr_class(a.n)),
        (weight, "δ_{0;{1..n}}", _whole_boundary(a.n)),
    ]

