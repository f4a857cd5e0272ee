from dataclasses import dataclass

from genusonedivisors.errors import InvalidDimensionException


@dataclass(frozen=True)
class LatticePoint:
    """A point (x, y) of (Z/N)^2, the N-torsion of the square torus"""

    x: int
    y: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidDimensionException(f"modulus must be positive, got {self.modulus}")
        if not (0 <= self.x < self.modulus and 0 <= self.y < self.modulus):
            raise InvalidDimensionException(f"({self.x}, {self.y}) is not reduced mod {self.modulus}")

    def to_dict(self) -> list:
        return [self.x, self.y]
