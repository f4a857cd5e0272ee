"""Pullback of divisor classes along maps that forget marked points"""
import logging
from math import gcd
from typing import List, Optional, Sequence, Tuple

from genusonedivisors.certificates import (
    HAIN_IRREDUCIBLE_SOURCE,
    X_CURVE_MOVING_SOURCE,
    verdict_for,
    x_curve,
)
from genusonedivisors.class_algebra import pair, ray_representative
from genusonedivisors.errors import (
    InvalidDimensionException,
    InvalidKeepMapException,
    NotPrimitiveException,
    ZeroEntryException,
)
from genusonedivisors.hain_divisor import hain_class
from genusonedivisors.models import Assumption, CertificateReport, DivisorClass, Signature
from genusonedivisors.models.boundary_vector import check_point_count
from genusonedivisors.models.certificate_report import IRREDUCIBLE_DIVISOR, MOVING_CURVE, PROJECTION_FORMULA
from genusonedivisors.utils import boundary_masks, full_mask, labels_to_mask

logger = logging.getLogger(__name__)

PULLBACK_IRREDUCIBLE_SOURCE = (
    "the forgetful map has irreducible fibers, so it pulls an irreducible divisor "
    "back to an irreducible divisor; " + HAIN_IRREDUCIBLE_SOURCE
)
PULLBACK_MOVING_SOURCE = (
    "adding general points to the fibers of X lifts it to curves covering the "
    "pulled-back divisor; " + X_CURVE_MOVING_SOURCE
)
PROJECTION_FORMULA_SOURCE = "C·π*D = π_*C·D, so the pairing is computed on the 3-pointed space"


def check_keep_map(m: int, n: int, keep: Optional[Sequence[int]]) -> Tuple[int, ...]:
    """Validate an injective map {1..m} -> {1..n}; None means the inclusion

    Raises:
        InvalidKeepMapException: m > n, wrong length, a label out of range or
            a repeated image
    """
    if m > n:
        raise InvalidKeepMapException(f"cannot pull back from {m} points to {n} points")
    if keep is None:
        return tuple(range(1, m + 1))
    keep = tuple(int(label) for label in keep)
    if len(keep) != m:
        raise InvalidKeepMapException(f"keep map {list(keep)} must list {m} images")
    for label in keep:
        if not 1 <= label <= n:
            raise InvalidKeepMapException(f"keep map image {label} is out of range 1..{n}")
    if len(set(keep)) != m:
        raise InvalidKeepMapException(f"keep map {list(keep)} is not injective")
    return keep


def _image_mask(mask: int, keep: Tuple[int, ...]) -> int:
    image = 0
    label = 1
    while mask:
        if mask & 1:
            image |= 1 << (keep[label - 1] - 1)
        mask >>= 1
        label += 1
    return image


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & mask


def pullback(divisor: DivisorClass, n: int, keep: Optional[Sequence[int]] = None) -> DivisorClass:
    """π*D on n points

    λ pulls back to λ. δ_{0;T} pulls back to the sum of δ_{0;S} over the
    S ⊆ {1..n} with S ∩ keep({1..m}) = keep(T).
    """
    check_point_count(n)
    keep = check_keep_map(divisor.n, n, keep)
    forgotten = full_mask(n) & ~labels_to_mask(keep)
    boundary = {}
    for mask, value in divisor.boundary_items():
        kept = _image_mask(mask, keep)
        for extra in _submasks(forgotten):
            target = kept | extra
            boundary[target] = boundary.get(target, 0) + value
    logger.debug("pulled back a class with %d terms from %d to %d points", len(boundary), divisor.n, n)
    return DivisorClass(n, divisor.lambda_coeff, boundary, validate=False)


def _triple(n: int, a1: int, a2: int) -> Signature:
    if not isinstance(n, int) or n < 3:
        raise InvalidDimensionException(f"pulled-back triples need at least 3 points, got n = {n!r}")
    triple = Signature((a1, a2, -a1 - a2))
    if triple.has_zero_entry:
        raise ZeroEntryException(f"triple {list(triple.entries)} has a zero entry; pull back hain_class instead")
    return triple


def pulled_back_hain_triple(n: int, a1: int, a2: int) -> DivisorClass:
    """π*D_{(a1, a2, -a1-a2)} on n points, expanded term by term

    (-1 + a1² + a2² + a1a2)(λ + Σ_{S⊇{1,2,3}} δ_{0;S})
    - a1a2 Σ_{S⊇{1,2}, 3∉S} δ_{0;S}
    + a1(a1+a2) Σ_{S⊇{1,3}, 2∉S} δ_{0;S}
    + a2(a1+a2) Σ_{S⊇{2,3}, 1∉S} δ_{0;S}
    """
    _triple(n, a1, a2)
    check_point_count(n)
    prefactor = -1 + a1 * a1 + a2 * a2 + a1 * a2
    one, two, three = 1, 2, 4
    pieces = (
        (one | two | three, 0, prefactor),
        (one | two, three, -a1 * a2),
        (one | three, two, a1 * (a1 + a2)),
        (two | three, one, a2 * (a1 + a2)),
    )
    boundary = {}
    for mask in boundary_masks(n):
        for required, excluded, value in pieces:
            if mask & required == required and not mask & excluded:
                if value:
                    boundary[mask] = value
                break
    return DivisorClass(n, prefactor, boundary, validate=False)


def pulled_back_certificate(n: int, a1: int, a2: int) -> CertificateReport:
    """Certificate for π*D_{(a1, a2, -a1-a2)} from the lifted X curve

    The pairing is X·D_a on the 3-pointed space, equal to the lifted pairing
    by the projection formula.

    Raises:
        NotPrimitiveException: gcd(a1, a2) != 1
        ZeroEntryException: a1, a2 or a1 + a2 is zero
    """
    if gcd(a1, a2) != 1:
        raise NotPrimitiveException(f"gcd({a1}, {a2}) = {gcd(a1, a2)}; the divisor is reducible")
    triple = _triple(n, a1, a2)
    base = hain_class(triple)
    curve = x_curve(triple)
    pairing = pair(curve, base)
    assumptions = (
        Assumption(IRREDUCIBLE_DIVISOR, PULLBACK_IRREDUCIBLE_SOURCE),
        Assumption(MOVING_CURVE, PULLBACK_MOVING_SOURCE),
        Assumption(PROJECTION_FORMULA, PROJECTION_FORMULA_SOURCE),
    )
    return CertificateReport(
        pairing=pairing,
        divisor=pulled_back_hain_triple(n, a1, a2),
        curve=curve,
        assumptions=assumptions,
        verdict=verdict_for(pairing, assumptions),
        base_divisor=base,
    )


def pulled_back_rays(n: int, bound: int) -> List[Tuple[int, int, DivisorClass]]:
    """Normalized rays of π*D_{(a1, a2, -a1-a2)} for primitive (a1, a2)

    Pairs range over |a_i| <= bound with a1, a2 and a1 + a2 nonzero. Since
    D_a = D_{-a}, only a1 > 0 is listed.
    """
    rays = []
    for a1 in range(1, bound + 1):
        for a2 in range(-bound, bound + 1):
            if a2 == 0 or a1 + a2 == 0 or gcd(a1, a2) != 1:
                continue
            rays.append((a1, a2, ray_representative(pulled_back_hain_triple(n, a1, a2))))
    return rays
