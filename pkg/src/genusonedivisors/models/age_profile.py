from dataclasses import dataclass
from typing import Tuple

from genusonedivisors.errors import InvalidProfileException


@dataclass(frozen=True)
class AgeProfile:
    """Order ``k`` of an automorphism and the exponents k_j of its
    eigenvalues e^{2πi k_j / k} on the deformation space.
    """

    k: int
    exps: Tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(value) for value in self.exps)
        if not isinstance(self.k, int) or self.k < 2:
            raise InvalidProfileException(f"automorphism order must be an integer >= 2, got {self.k!r}")
        if not exps:
            raise InvalidProfileException("exponent list is empty")
        for value in exps:
            if not 0 <= value < self.k:
                raise InvalidProfileException(f"exponent {value} is outside 0..{self.k - 1}")
        object.__setattr__(self, "exps", exps)

    @property
    def nonzero_exps(self) -> Tuple[int, ...]:
        return tuple(value for value in self.exps if value)

    def inverse(self) -> "AgeProfile":
        return AgeProfile(self.k, tuple((self.k - value) % self.k for value in self.exps))

    def to_dict(self) -> dict:
        return {"k": self.k, "exps": list(self.exps)}

    @classmethod
    def from_dict(cls, data: dict) -> "AgeProfile":
        return cls(int(data["k"]), tuple(data["exps"]))
