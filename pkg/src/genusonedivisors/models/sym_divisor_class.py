from fractions import Fraction
from typing import Dict, Mapping, Optional

from genusonedivisors.errors import DimensionMismatchException, InvalidDimensionException, InvalidLabelException
from genusonedivisors.models.boundary_vector import format_combination
from genusonedivisors.models.constants import SYM_DELTA_SYMBOL
from genusonedivisors.utils import Rational, format_rational, to_fraction


class SymDivisorClass:
    """Class a·δ̃_irr + Σ_{k=2}^n b_k·δ̃_{0;k} on the unordered-points quotient"""

    __slots__ = ("n", "a_irr", "b")

    def __init__(self, n: int, a_irr: Rational = 0, b: Optional[Mapping[int, Rational]] = None) -> None:
        if not isinstance(n, int) or n < 1:
            raise InvalidDimensionException(f"quotient classes need n >= 1, got {n!r}")
        coefficients: Dict[int, Fraction] = {}
        for k, value in (b or {}).items():
            k = int(k)
            if not 2 <= k <= n:
                raise InvalidLabelException(f"δ̃_{{0;{k}}} does not exist for n = {n}")
            coefficients[k] = to_fraction(value)
        self.n = n
        self.a_irr = to_fraction(a_irr)
        self.b = {k: coefficients.get(k, Fraction(0)) for k in range(2, n + 1)}

    @classmethod
    def from_coordinates(cls, n: int, coordinates) -> "SymDivisorClass":
        """``coordinates`` is (a_irr, b_2, ..., b_n)"""
        coordinates = list(coordinates)
        if len(coordinates) != n:
            raise DimensionMismatchException(f"expected {n} coordinates (a_irr, b_2..b_{n}), got {len(coordinates)}")
        return cls(n, coordinates[0], {k: value for k, value in zip(range(2, n + 1), coordinates[1:])})

    def coordinates(self):
        return (self.a_irr,) + tuple(self.b[k] for k in range(2, self.n + 1))

    def __add__(self, other):
        if not isinstance(other, SymDivisorClass):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatchException(f"cannot combine classes on {self.n} and {other.n} points")
        return SymDivisorClass(self.n, self.a_irr + other.a_irr, {k: self.b[k] + other.b[k] for k in self.b})

    def __mul__(self, scalar):
        if isinstance(scalar, (SymDivisorClass, float)):
            return NotImplemented
        scalar = to_fraction(scalar)
        return SymDivisorClass(self.n, self.a_irr * scalar, {k: value * scalar for k, value in self.b.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, SymDivisorClass):
            return False
        return self.coordinates() == other.coordinates()

    def __hash__(self):
        return hash(self.coordinates())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "a_irr": format_rational(self.a_irr),
            "b": {str(k): format_rational(self.b[k]) for k in range(2, self.n + 1)},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SymDivisorClass":
        return cls(int(data["n"]), to_fraction(data["a_irr"]),
                   {int(k): to_fraction(value) for k, value in data.get("b", {}).items()})

    def to_str(self) -> str:
        terms = []
        if self.a_irr:
            terms.append((self.a_irr, f"{SYM_DELTA_SYMBOL}irr"))
        for k in range(2, self.n + 1):
            if self.b[k]:
                terms.append((self.b[k], f"{SYM_DELTA_SYMBOL}{{0;{k}}}"))
        return format_combination(terms)

    def __repr__(self):
        return f"SymDivisorClass(n={self.n}, {self.to_str()})"
