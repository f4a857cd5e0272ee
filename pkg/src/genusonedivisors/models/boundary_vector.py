from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from genusonedivisors.errors import (
    DimensionMismatchException,
    InvalidDimensionException,
    InvalidLabelException,
)
from genusonedivisors.models.constants import DELTA_SYMBOL, LAMBDA_SYMBOL, MINUS_SIGN
from genusonedivisors.utils import (
    Rational,
    format_rational,
    full_mask,
    get_max_points,
    labels_to_mask,
    mask_to_labels,
    popcount,
    subset_sort_key,
    to_fraction,
)


def check_point_count(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise InvalidDimensionException(f"marked-point count must be a positive integer, got {n!r}")
    max_points = get_max_points()
    if n > max_points:
        raise InvalidDimensionException(f"marked-point count {n} exceeds the configured cap {max_points}")
    return n


def check_boundary_mask(n: int, mask: int) -> int:
    if mask & ~full_mask(n) or mask <= 0:
        raise InvalidLabelException(f"subset {list(mask_to_labels(mask))} is not contained in 1..{n}")
    if popcount(mask) < 2:
        raise InvalidLabelException(f"boundary subset {list(mask_to_labels(mask))} has fewer than two labels")
    return mask


class SparseBoundaryVector:
    """Exact coefficient vector over {λ} ∪ {δ_{0;S} : |S| >= 2}

    Subsets are stored as bitmasks (bit i-1 for label i) and zero
    coefficients are never stored, so equality is coefficientwise equality.
    Instances are immutable; arithmetic returns new instances of the same
    concrete class.
    """

    __slots__ = ("_n", "_lambda", "_boundary", "_hash")

    def __init__(self, n: int, lambda_value: Rational = 0,
                 boundary: Optional[Mapping[int, Rational]] = None, validate: bool = True) -> None:
        if validate:
            check_point_count(n)
        self._n = n
        self._lambda = to_fraction(lambda_value)
        entries: Dict[int, Fraction] = {}
        if boundary:
            for mask, value in boundary.items():
                if validate:
                    check_boundary_mask(n, mask)
                value = to_fraction(value)
                if value:
                    entries[mask] = value
        self._boundary = entries
        self._hash = None

    @classmethod
    def from_subsets(cls, n: int, lambda_value: Rational = 0,
                     boundary: Optional[Mapping[Iterable[int], Rational]] = None):
        """Build from label collections, e.g. {(1, 2): 3, (1, 2, 3): 1}"""
        masks: Dict[int, Fraction] = {}
        for labels, value in (boundary or {}).items():
            labels = tuple(labels)
            for label in labels:
                if not 1 <= label <= n:
                    raise InvalidLabelException(f"label {label} is out of range 1..{n}")
            mask = labels_to_mask(labels)
            masks[mask] = masks.get(mask, Fraction(0)) + to_fraction(value)
        return cls(n, lambda_value, masks)

    @classmethod
    def zero(cls, n: int):
        return cls(n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def lambda_value(self) -> Fraction:
        """The λ coordinate, whatever it means for the concrete class"""
        return self._lambda

    def coefficient(self, subset) -> Fraction:
        """Coefficient on δ_{0;S}; ``subset`` is a bitmask or label collection"""
        mask = subset if isinstance(subset, int) else labels_to_mask(subset)
        return self._boundary.get(mask, Fraction(0))

    def boundary_items(self) -> Iterator[Tuple[int, Fraction]]:
        """Nonzero (mask, value) pairs in (size, lex) order"""
        for mask in sorted(self._boundary, key=subset_sort_key):
            yield mask, self._boundary[mask]

    def support(self) -> Tuple[int, ...]:
        return tuple(mask for mask, _ in self.boundary_items())

    def is_zero(self) -> bool:
        return not self._lambda and not self._boundary

    def _check_same_n(self, other: "SparseBoundaryVector") -> None:
        if self._n != other._n:
            raise DimensionMismatchException(f"cannot combine classes on {self._n} and {other._n} points")

    def _new(self, lambda_value: Fraction, boundary: Dict[int, Fraction]):
        return type(self)(self._n, lambda_value, boundary, validate=False)

    def __add__(self, other):
        if not isinstance(other, SparseBoundaryVector):
            return NotImplemented
        self._check_same_n(other)
        boundary = dict(self._boundary)
        for mask, value in other._boundary.items():
            total = boundary.get(mask, 0) + value
            if total:
                boundary[mask] = total
            else:
                boundary.pop(mask, None)
        return self._new(self._lambda + other._lambda, boundary)

    def __neg__(self):
        return self._new(-self._lambda, {mask: -value for mask, value in self._boundary.items()})

    def __sub__(self, other):
        if not isinstance(other, SparseBoundaryVector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, (SparseBoundaryVector, float)):
            return NotImplemented
        scalar = to_fraction(scalar)
        if not scalar:
            return self._new(Fraction(0), {})
        return self._new(self._lambda * scalar, {mask: value * scalar for mask, value in self._boundary.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(self) is not type(other):
            return False
        return self._n == other._n and self._lambda == other._lambda and self._boundary == other._boundary

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._n, self._lambda, frozenset(self._boundary.items())))
        return self._hash

    def to_dict(self) -> dict:
        """Returns the shared JSON schema {"n", "lambda", "boundary"}"""
        return {
            "n": self._n,
            "lambda": format_rational(self._lambda),
            "boundary": [
                {"S": list(mask_to_labels(mask)), "c": format_rational(value)}
                for mask, value in self.boundary_items()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict):
        boundary = {}
        for entry in data.get("boundary", []):
            mask = labels_to_mask(entry["S"])
            boundary[mask] = boundary.get(mask, Fraction(0)) + to_fraction(entry["c"])
        return cls(int(data["n"]), to_fraction(data["lambda"]), boundary)

    def to_str(self) -> str:
        """Human-readable linear combination, e.g. 2λ − δ{1,2} + 2δ{1,2,3}"""
        terms = []
        if self._lambda:
            terms.append((self._lambda, LAMBDA_SYMBOL))
        for mask, value in self.boundary_items():
            labels = ",".join(str(label) for label in mask_to_labels(mask))
            terms.append((value, f"{DELTA_SYMBOL}{{{labels}}}"))
        return format_combination(terms)

    def __repr__(self):
        return f"{type(self).__name__}(n={self._n}, {self.to_str()})"


def format_combination(terms) -> str:
    if not terms:
        return "0"
    pieces = []
    for index, (value, symbol) in enumerate(terms):
        sign = MINUS_SIGN if value < 0 else "+"
        magnitude = abs(value)
        if magnitude == 1:
            body = symbol
        elif magnitude.denominator == 1:
            body = f"{magnitude.numerator}{symbol}"
        else:
            body = f"({magnitude.numerator}/{magnitude.denominator}){symbol}"
        if index == 0:
            pieces.append(body if sign == "+" else f"{MINUS_SIGN}{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)
