"""Certificate curves and the extremality check for effective divisors.

A moving curve C inside an irreducible effective divisor D with C·D < 0
makes D extremal and rigid. Only the pairing is computed here; the two
geometric facts are caller-supplied assumptions carried in the report.
"""
import logging
from fractions import Fraction
from typing import Optional, Tuple

from genusonedivisors.class_algebra import pair
from genusonedivisors.errors import InvalidDimensionException, NotPositiveException, ZeroEntryException
from genusonedivisors.hain_divisor import SignatureLike, hain_class, validate_signature
from genusonedivisors.models import Assumption, CertificateReport, CurveClass, DivisorClass, Signature
from genusonedivisors.models.certificate_report import INVALID, IRREDUCIBLE_DIVISOR, MOVING_CURVE, VALID
from genusonedivisors.utils import labels_to_mask

logger = logging.getLogger(__name__)

HAIN_IRREDUCIBLE_SOURCE = (
    "D_a is irreducible for primitive a: monodromy of the universal curve acts "
    "transitively on torsion points of exact order d = gcd(a)"
)
X_CURVE_MOVING_SOURCE = (
    "X fixes a general pointed elliptic curve and p_1, and lets p_2, p_3 vary "
    "subject to Σa_i p_i = 0; such curves cover D_a"
)


def x_curve(a: SignatureLike) -> CurveClass:
    """The curve X in D_a on the 3-pointed space

    X·δ_irr = 0, X·δ_{0;{i,j}} = a_k² - 1 for {i, j, k} = {1, 2, 3} and
    X·δ_{0;{1,2,3}} = 1.

    Raises:
        InvalidDimensionException: a does not have three entries
        ZeroEntryException: a has a zero entry
    """
    a = validate_signature(a)
    if a.n != 3:
        raise InvalidDimensionException(f"the curve X is defined for 3-pointed signatures, got {list(a.entries)}")
    if a.has_zero_entry:
        raise ZeroEntryException(f"the curve X degenerates for signature {list(a.entries)} with a zero entry")
    pairings = {
        labels_to_mask((1, 2)): a[3] ** 2 - 1,
        labels_to_mask((1, 3)): a[2] ** 2 - 1,
        labels_to_mask((2, 3)): a[1] ** 2 - 1,
        labels_to_mask((1, 2, 3)): 1,
    }
    return CurveClass(3, 0, pairings, validate=False)


def _assumption(tag: str, source: Optional[str]) -> Tuple[Assumption, ...]:
    if not source:
        return ()
    return (Assumption(tag, source),)


def verdict_for(pairing: Fraction, assumptions: Tuple[Assumption, ...]) -> str:
    tags = {assumption.tag for assumption in assumptions}
    if pairing < 0 and IRREDUCIBLE_DIVISOR in tags and MOVING_CURVE in tags:
        return VALID
    return INVALID


def certify_extremal(divisor: DivisorClass, curve: CurveClass,
                     irreducible: Optional[str] = None, moving: Optional[str] = None) -> CertificateReport:
    """Pair C with D and decide whether the pair certifies D extremal and rigid

    Args:
        divisor: the effective divisor D
        curve: the curve class C
        irreducible: citation for "D is irreducible", or None if not asserted
        moving: citation for "C moves in a family covering D", or None

    Returns:
        CertificateReport: verdict "valid" only for C·D < 0 with both facts asserted
    """
    pairing = pair(curve, divisor)
    assumptions = _assumption(IRREDUCIBLE_DIVISOR, irreducible) + _assumption(MOVING_CURVE, moving)
    verdict = verdict_for(pairing, assumptions)
    logger.debug("certificate pairing %s, verdict %s", pairing, verdict)
    return CertificateReport(pairing, divisor, curve, assumptions, verdict)


def certify_hain(a: SignatureLike) -> CertificateReport:
    """The X-curve certificate for D_a on the 3-pointed space"""
    a = validate_signature(a)
    irreducible = HAIN_IRREDUCIBLE_SOURCE if a.is_primitive else None
    return certify_extremal(hain_class(a), x_curve(a), irreducible, X_CURVE_MOVING_SOURCE)


def ray_class(k: int) -> DivisorClass:
    """λ + δ_{0;{1,2,3}} + δ_{0;{1,2}} + (1/k)δ_{0;{1,3}} - (1/(k+1))δ_{0;{2,3}}"""
    return DivisorClass.from_subsets(3, 1, {
        (1, 2, 3): 1,
        (1, 2): 1,
        (1, 3): Fraction(1, k),
        (2, 3): Fraction(-1, k + 1),
    })


def extremal_ray_family(k: int) -> Tuple[Signature, DivisorClass, DivisorClass]:
    """The signature (k+1, -k, -1), its class, and the ray it spans

    hain_class equals k(k+1) times the ray class.

    Raises:
        NotPositiveException: k < 1
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise NotPositiveException(f"ray index must be a positive integer, got {k!r}")
    signature = Signature((k + 1, -k, -1))
    return signature, hain_class(signature), ray_class(k)
