"""Age arithmetic for automorphisms of pointed curves.

An automorphism of order k acts on the deformation space with eigenvalues
e^{2πi k_j/k}; its age is Σ k_j/k. Canonical forms extend over the
quotient singularity when every element that is not a quasi-reflection
has age at least one.
"""
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Tuple

from genusonedivisors.models import AgeProfile, AgeVerdict, ProfileAge
from genusonedivisors.models.age_verdict import EXTENDS, UNDECIDED


def age(profile: AgeProfile) -> Fraction:
    return Fraction(sum(profile.exps), profile.k)


def is_quasi_reflection(profile: AgeProfile) -> bool:
    """Exactly one eigenvalue differs from one"""
    return len(profile.nonzero_exps) == 1


def is_ambiguous(profile: AgeProfile) -> bool:
    """A single nontrivial eigenvalue that is not a primitive k-th root of unity"""
    return is_quasi_reflection(profile) and gcd(profile.nonzero_exps[0], profile.k) > 1


def profile_report(profile: AgeProfile) -> ProfileAge:
    return ProfileAge(profile, age(profile), is_quasi_reflection(profile), is_ambiguous(profile))


def reid_tai_check(profiles: Iterable[AgeProfile]) -> AgeVerdict:
    """Ages of every profile and the extension verdict

    Quasi-reflections are excluded from the verdict; the rest must have
    age >= 1 for the verdict "extends". With no remaining profile the
    verdict holds vacuously.
    """
    reports = tuple(profile_report(profile) for profile in profiles)
    extends = all(entry.age >= 1 for entry in reports if not entry.quasi_reflection)
    return AgeVerdict(reports, EXTENDS if extends else UNDECIDED)


APPENDIX_FIXTURES: Dict[str, Tuple[AgeProfile, Fraction]] = {
    "smooth elliptic, involution with three fixed marked points": (AgeProfile(2, (1, 1)), Fraction(1)),
    "smooth elliptic, involution with four fixed marked points": (AgeProfile(2, (1, 1, 1)), Fraction(3, 2)),
    "elliptic tail, order 2": (AgeProfile(2, (1, 1)), Fraction(1)),
    "elliptic tail, order 3": (AgeProfile(3, (1, 2)), Fraction(1)),
    "elliptic tail, order 4": (AgeProfile(4, (1, 2, 1)), Fraction(1)),
    "two-component circle, involution": (AgeProfile(2, (1,)), Fraction(1, 2)),
}


def fixture_profiles() -> List[Tuple[str, AgeProfile, Fraction]]:
    return [(name, profile, expected) for name, (profile, expected) in APPENDIX_FIXTURES.items()]
