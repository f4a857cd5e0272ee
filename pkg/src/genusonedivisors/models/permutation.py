from dataclasses import dataclass
from typing import Sequence, Tuple

from genusonedivisors.errors import InvalidPermutationException


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``image[i - 1]`` is the image of label i."""

    image: Tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(value) for value in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise InvalidPermutationException(f"{list(image)} is not a permutation of 1..{len(image)}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        image = list(range(1, n + 1))
        image[i - 1], image[j - 1] = j, i
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, label: int) -> int:
        return self.image[label - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Returns self ∘ other (apply ``other`` first)"""
        if self.n != other.n:
            raise InvalidPermutationException(f"cannot compose permutations of {self.n} and {other.n} labels")
        return Permutation(tuple(self.image[value - 1] for value in other.image))

    def inverse(self) -> "Permutation":
        inverse = [0] * self.n
        for label, value in enumerate(self.image, start=1):
            inverse[value - 1] = label
        return Permutation(tuple(inverse))

    def apply_to_mask(self, mask: int) -> int:
        image_mask = 0
        label = 1
        while mask:
            if mask & 1:
                image_mask |= 1 << (self.image[label - 1] - 1)
            mask >>= 1
            label += 1
        return image_mask

    def apply_to_entries(self, entries: Sequence[int]) -> Tuple[int, ...]:
        """Moves the entry at position i to position p(i)"""
        if len(entries) != self.n:
            raise InvalidPermutationException(f"permutation of {self.n} labels applied to {len(entries)} entries")
        moved = [0] * self.n
        for label, value in enumerate(entries, start=1):
            moved[self.image[label - 1] - 1] = value
        return tuple(moved)

    def to_dict(self) -> list:
        return list(self.image)
