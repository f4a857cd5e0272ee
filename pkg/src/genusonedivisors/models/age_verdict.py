from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from genusonedivisors.models.age_profile import AgeProfile
from genusonedivisors.utils import format_rational, to_fraction

EXTENDS = "extends"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class ProfileAge:
    """Age of one profile and how the verdict treats it"""

    profile: AgeProfile
    age: Fraction
    quasi_reflection: bool
    ambiguous: bool

    @property
    def age_is_one_over_k(self) -> bool:
        return self.age == Fraction(1, self.profile.k)

    def to_dict(self) -> dict:
        return {
            "profile": self.profile.to_dict(),
            "age": format_rational(self.age),
            "quasi_reflection": self.quasi_reflection,
            "ambiguous": self.ambiguous,
            "age_is_one_over_k": self.age_is_one_over_k,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ProfileAge":
        return cls(
            profile=AgeProfile.from_dict(data["profile"]),
            age=to_fraction(data["age"]),
            quasi_reflection=bool(data["quasi_reflection"]),
            ambiguous=bool(data["ambiguous"]),
        )


@dataclass(frozen=True)
class AgeVerdict:
    profiles: Tuple[ProfileAge, ...]
    verdict: str

    @property
    def extends(self) -> bool:
        return self.verdict == EXTENDS

    @property
    def minimum_age(self) -> Optional[Fraction]:
        """Smallest age over every profile, quasi-reflections included"""
        if not self.profiles:
            return None
        return min(entry.age for entry in self.profiles)

    def to_dict(self) -> dict:
        minimum = self.minimum_age
        return {
            "profiles": [entry.to_dict() for entry in self.profiles],
            "minimum_age": format_rational(minimum) if minimum is not None else None,
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AgeVerdict":
        return cls(
            profiles=tuple(ProfileAge.from_dict(entry) for entry in data["profiles"]),
            verdict=str(data["verdict"]),
        )
