from dataclasses import dataclass, field
from typing import Dict

from genusonedivisors.errors import InvalidDimensionException
from genusonedivisors.models.boundary_vector import check_boundary_mask, check_point_count
from genusonedivisors.utils import labels_to_mask, mask_to_labels, subset_sort_key


@dataclass(frozen=True)
class FamilyData:
    """Degeneration counts of a one-parameter family of pointed genus-one
    curves: ``d_irr`` rational nodal fibers and ``d_S[mask]`` fibers where
    the sections labeled by S meet.
    """

    n: int
    d_irr: int = 0
    d_S: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        check_point_count(self.n)
        if not isinstance(self.d_irr, int) or self.d_irr < 0:
            raise InvalidDimensionException(f"d_irr must be a nonnegative integer, got {self.d_irr!r}")
        counts = {}
        for mask, count in self.d_S.items():
            check_boundary_mask(self.n, mask)
            if not isinstance(count, int) or count < 0:
                raise InvalidDimensionException(
                    f"d_S for {list(mask_to_labels(mask))} must be a nonnegative integer, got {count!r}"
                )
            if count:
                counts[mask] = count
        object.__setattr__(self, "d_S", counts)

    @classmethod
    def from_subsets(cls, n: int, d_irr: int = 0, d_S=None) -> "FamilyData":
        return cls(n, d_irr, {labels_to_mask(labels): count for labels, count in (d_S or {}).items()})

    def count(self, subset) -> int:
        mask = subset if isinstance(subset, int) else labels_to_mask(subset)
        return self.d_S.get(mask, 0)

    def __hash__(self):
        return hash((self.n, self.d_irr, frozenset(self.d_S.items())))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d_irr": self.d_irr,
            "d_S": [
                {"S": list(mask_to_labels(mask)), "count": self.d_S[mask]}
                for mask in sorted(self.d_S, key=subset_sort_key)
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FamilyData":
        d_S = {}
        for entry in data.get("d_S", []):
            mask = labels_to_mask(entry["S"])
            d_S[mask] = d_S.get(mask, 0) + int(entry["count"])
        return cls(int(data["n"]), int(data.get("d_irr", 0)), d_S)
