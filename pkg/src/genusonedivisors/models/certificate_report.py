from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from genusonedivisors.models.curve_class import CurveClass
from genusonedivisors.models.divisor_class import DivisorClass
from genusonedivisors.utils import format_rational, to_fraction

IRREDUCIBLE_DIVISOR = "irreducible-divisor"
MOVING_CURVE = "moving-curve"
PROJECTION_FORMULA = "projection-formula"

VALID = "valid"
INVALID = "invalid"


@dataclass(frozen=True)
class Assumption:
    """A geometric fact asserted by the caller, never computed"""

    tag: str
    source: str

    def to_dict(self) -> dict:
        return {"tag": self.tag, "source": self.source}

    @classmethod
    def from_dict(cls, data: dict) -> "Assumption":
        return cls(str(data["tag"]), str(data["source"]))


@dataclass(frozen=True)
class CertificateReport:
    pairing: Fraction
    divisor: DivisorClass
    curve: CurveClass
    assumptions: Tuple[Assumption, ...]
    verdict: str
    base_divisor: Optional[DivisorClass] = None

    @property
    def is_valid(self) -> bool:
        return self.verdict == VALID

    def has_assumption(self, tag: str) -> bool:
        return any(assumption.tag == tag for assumption in self.assumptions)

    def to_dict(self) -> dict:
        return {
            "pairing": format_rational(self.pairing),
            "verdict": self.verdict,
            "divisor": self.divisor.to_dict(),
            "curve": self.curve.to_dict(),
            "base_divisor": self.base_divisor.to_dict() if self.base_divisor is not None else None,
            "assumptions": [assumption.to_dict() for assumption in self.assumptions],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CertificateReport":
        base = data.get("base_divisor")
        return cls(
            pairing=to_fraction(data["pairing"]),
            divisor=DivisorClass.from_dict(data["divisor"]),
            curve=CurveClass.from_dict(data["curve"]),
            assumptions=tuple(Assumption.from_dict(entry) for entry in data.get("assumptions", [])),
            verdict=str(data["verdict"]),
            base_divisor=DivisorClass.from_dict(base) if base is not None else None,
        )
