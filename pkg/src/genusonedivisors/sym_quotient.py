"""Divisor classes on the quotient of the n-pointed space by the symmetric
group, in the basis δ̃_irr, δ̃_{0;2}, ..., δ̃_{0;n}.

δ̃_{0;k} is the image of the union of the δ_{0;S} with |S| = k, and the
invariant class 12λ = δ_irr maps to δ̃_irr with coefficient 1.
"""
import logging
from fractions import Fraction
from math import comb
from typing import List

from genusonedivisors.errors import InvalidDimensionException, NotSymmetricException
from genusonedivisors.models import ConstraintReport, DivisorClass, SymCurveClass, SymDivisorClass
from genusonedivisors.models.constants import BOUNDARY_EXEMPTION_CAVEAT, SYM_NORMALIZATION
from genusonedivisors.utils import boundary_masks, mask_to_labels, popcount

logger = logging.getLogger(__name__)


def symmetrize(divisor: DivisorClass) -> SymDivisorClass:
    """Image of a relabeling-invariant class on the quotient

    Raises:
        NotSymmetricException: two subsets of the same size carry different
            coefficients
    """
    n = divisor.n
    b = {}
    for mask in boundary_masks(n):
        k = popcount(mask)
        value = divisor.coefficient(mask)
        if k not in b:
            b[k] = (mask, value)
        elif b[k][1] != value:
            first = list(mask_to_labels(b[k][0]))
            raise NotSymmetricException(
                f"coefficients of δ{first} and δ{list(mask_to_labels(mask))} differ: {b[k][1]} != {value}"
            )
    return SymDivisorClass(n, divisor.lambda_coeff / 12, {k: value for k, (_, value) in b.items()})


def average_over_relabelings(divisor: DivisorClass) -> DivisorClass:
    """The average of relabel(p, D) over all permutations p

    Every size-k subset receives the mean of the size-k coefficients of D.
    """
    n = divisor.n
    totals = {}
    for mask, value in divisor.boundary_items():
        k = popcount(mask)
        totals[k] = totals.get(k, Fraction(0)) + value
    means = {k: total / comb(n, k) for k, total in totals.items()}
    boundary = {mask: means[popcount(mask)] for mask in boundary_masks(n) if popcount(mask) in means}
    return DivisorClass(n, divisor.lambda_coeff, boundary, validate=False)


def boundary_cone_member(divisor: SymDivisorClass) -> bool:
    """True iff D is a nonnegative combination of δ̃_irr and the δ̃_{0;k}"""
    return all(value >= 0 for value in divisor.coordinates())


def certificate_curves(n: int, g: int = 1) -> List[SymCurveClass]:
    """Moving curves whose pairings bound the effective cone of the quotient

    In genus one: C meets δ̃_{0;2} in n - 1 points, C_j (2 <= j < n) pairs to
    -(n - j) with δ̃_{0;j} and to n - j with δ̃_{0;j+1}, and C_n pairs to 12
    with δ̃_irr and to -1 with δ̃_{0;n}. For other genera only the C_j are
    produced, with δ̃_{0;j} pairing -(2g - 2 + n - j).
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidDimensionException(f"certificate curves need n >= 2, got {n!r}")
    if not isinstance(g, int) or g < 0:
        raise InvalidDimensionException(f"genus must be a nonnegative integer, got {g!r}")
    chain = [
        SymCurveClass(f"C_{j}", n, 0, {j: -(2 * g - 2 + n - j), j + 1: n - j})
        for j in range(2, n)
    ]
    if g != 1:
        return chain
    return [SymCurveClass("C", n, 0, {2: n - 1})] + chain + [SymCurveClass(f"C_{n}", n, 12, {n: -1})]


def _is_boundary_divisor(divisor: SymDivisorClass) -> bool:
    nonzero = [value for value in divisor.coordinates() if value]
    return len(nonzero) == 1 and nonzero[0] > 0


def nonboundary_constraints_check(divisor: SymDivisorClass, g: int = 1) -> ConstraintReport:
    """Pair D with every certificate curve

    An irreducible effective divisor other than a boundary divisor pairs
    nonnegatively with all of them. In genus one this is the chain
    b_2 >= 0, b_{j+1} >= b_j, 12·a_irr >= b_n.
    """
    n = divisor.n
    curves = certificate_curves(n, g)
    pairings = tuple((curve.name, curve.pair(divisor)) for curve in curves)
    chain = []
    if g == 1:
        chain.append(("b_2 >= 0", divisor.b[2] >= 0))
        for j in range(2, n):
            chain.append((f"b_{j + 1} >= b_{j}", divisor.b[j + 1] >= divisor.b[j]))
        chain.append((f"12·a_irr >= b_{n}", 12 * divisor.a_irr >= divisor.b[n]))
    else:
        for j in range(2, n):
            chain.append((
                f"{n - j}·b_{j + 1} >= {2 * g - 2 + n - j}·b_{j}",
                (n - j) * divisor.b[j + 1] >= (2 * g - 2 + n - j) * divisor.b[j],
            ))
    report = ConstraintReport(
        n=n,
        g=g,
        pairings=pairings,
        chain=tuple(chain),
        is_boundary_divisor=_is_boundary_divisor(divisor),
        normalization=SYM_NORMALIZATION,
        caveat=BOUNDARY_EXEMPTION_CAVEAT,
    )
    logger.debug("constraints for %s: failing %s", divisor.to_str(), report.failing_curves())
    return report
