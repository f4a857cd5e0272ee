from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from genusonedivisors.utils import format_rational, to_fraction


@dataclass(frozen=True)
class ConstraintReport:
    """Pairings of a quotient class with the certificate curves, and the
    inequalities on its coordinates they imply
    """

    n: int
    g: int
    pairings: Tuple[Tuple[str, Fraction], ...]
    chain: Tuple[Tuple[str, bool], ...]
    is_boundary_divisor: bool
    normalization: str
    caveat: str

    @property
    def all_nonnegative(self) -> bool:
        return all(value >= 0 for _, value in self.pairings)

    @property
    def chain_holds(self) -> bool:
        return all(holds for _, holds in self.chain)

    def failing_curves(self) -> Tuple[str, ...]:
        return tuple(name for name, value in self.pairings if value < 0)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "g": self.g,
            "pairings": [
                {"curve": name, "value": format_rational(value), "nonnegative": value >= 0}
                for name, value in self.pairings
            ],
            "all_nonnegative": self.all_nonnegative,
            "chain": [{"inequality": label, "holds": holds} for label, holds in self.chain],
            "is_boundary_divisor": self.is_boundary_divisor,
            "normalization": self.normalization,
            "caveat": self.caveat,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ConstraintReport":
        return cls(
            n=int(data["n"]),
            g=int(data["g"]),
            pairings=tuple((entry["curve"], to_fraction(entry["value"])) for entry in data["pairings"]),
            chain=tuple((entry["inequality"], bool(entry["holds"])) for entry in data["chain"]),
            is_boundary_divisor=bool(data["is_boundary_divisor"]),
            normalization=data["normalization"],
            caveat=data["caveat"],
        )
