from dataclasses import dataclass
from math import gcd
from typing import Tuple

from genusonedivisors.errors import DegenerateSignatureException, NotZeroSumException
from genusonedivisors.models.permutation import Permutation
from genusonedivisors.utils import labels_to_mask


@dataclass(frozen=True)
class Signature:
    """Zero-sum, not identically zero integer weights (a_1, ..., a_n)"""

    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(value) for value in self.entries)
        if sum(entries) != 0:
            raise NotZeroSumException(f"signature {list(entries)} sums to {sum(entries)}, not 0")
        if not any(entries):
            raise DegenerateSignatureException(f"signature {list(entries)} has all entries zero")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def d(self) -> int:
        """gcd of the nonzero entries, always positive"""
        value = 0
        for entry in self.entries:
            value = gcd(value, entry)
        return abs(value)

    @property
    def is_primitive(self) -> bool:
        return self.d == 1

    @property
    def zero_support(self) -> Tuple[int, ...]:
        return tuple(label for label, entry in enumerate(self.entries, start=1) if entry == 0)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(label for label, entry in enumerate(self.entries, start=1) if entry != 0)

    @property
    def support_mask(self) -> int:
        return labels_to_mask(self.support)

    @property
    def has_zero_entry(self) -> bool:
        return 0 in self.entries

    def negate(self) -> "Signature":
        return Signature(tuple(-entry for entry in self.entries))

    def permute(self, p: Permutation) -> "Signature":
        return Signature(p.apply_to_entries(self.entries))

    def stripped(self) -> "Signature":
        return Signature(tuple(entry for entry in self.entries if entry != 0))

    def scaled_down(self) -> "Signature":
        """The primitive signature b with a = d·b"""
        d = self.d
        return Signature(tuple(entry // d for entry in self.entries))

    def scaled(self, t: int) -> "Signature":
        return Signature(tuple(t * entry for entry in self.entries))

    def __getitem__(self, label: int) -> int:
        return self.entries[label - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def to_dict(self) -> list:
        return list(self.entries)
