from dataclasses import dataclass, field
from typing import Tuple

from genusonedivisors.models.lattice_point import LatticePoint


@dataclass(frozen=True)
class MonodromyOrbit:
    """One orbit of the shear moves on (Z/a)^2

    ``members`` is only filled by the enumeration; an orbit read back from
    JSON carries its size and representative alone.
    """

    invariant: int
    representative: LatticePoint
    size: int
    members: Tuple[Tuple[int, int], ...] = field(default=(), compare=False, repr=False)

    @property
    def modulus(self) -> int:
        return self.representative.modulus

    def to_dict(self) -> dict:
        return {
            "k": self.invariant,
            "size": self.size,
            "representative": self.representative.to_dict(),
            "modulus": self.modulus,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MonodromyOrbit":
        x, y = data["representative"]
        return cls(int(data["k"]), LatticePoint(int(x), int(y), int(data["modulus"])), int(data["size"]))
