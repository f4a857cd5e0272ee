from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict

from genusonedivisors.errors import DimensionMismatchException
from genusonedivisors.models.sym_divisor_class import SymDivisorClass
from genusonedivisors.utils import format_rational, to_fraction


@dataclass(frozen=True)
class SymCurveClass:
    """Pairing table of a curve class on the quotient against δ̃_irr and
    every δ̃_{0;k}; entries not listed pair to zero.
    """

    name: str
    n: int
    irr_pairing: Fraction = Fraction(0)
    pairings: Dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "irr_pairing", to_fraction(self.irr_pairing))
        object.__setattr__(self, "pairings", {int(k): to_fraction(v) for k, v in self.pairings.items() if v})

    def pairing_with(self, k: int) -> Fraction:
        return self.pairings.get(k, Fraction(0))

    def pair(self, divisor: SymDivisorClass) -> Fraction:
        if divisor.n != self.n:
            raise DimensionMismatchException(f"curve on {self.n} points paired with a class on {divisor.n} points")
        total = self.irr_pairing * divisor.a_irr
        for k, value in self.pairings.items():
            total += value * divisor.b[k]
        return total

    def __hash__(self):
        return hash((self.name, self.n, self.irr_pairing, frozenset(self.pairings.items())))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "irr": format_rational(self.irr_pairing),
            "pairings": {str(k): format_rational(self.pairings[k]) for k in sorted(self.pairings)},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SymCurveClass":
        return cls(str(data["name"]), int(data["n"]), to_fraction(data["irr"]),
                   {int(k): to_fraction(v) for k, v in data.get("pairings", {}).items()})
