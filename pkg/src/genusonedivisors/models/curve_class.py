from fractions import Fraction
from typing import Dict

from genusonedivisors.models.boundary_vector import SparseBoundaryVector
from genusonedivisors.models.constants import DELTA_SYMBOL, LAMBDA_SYMBOL
from genusonedivisors.utils import mask_to_labels


class CurveClass(SparseBoundaryVector):
    """Numerical curve class, stored as its pairing table against λ and
    the δ_{0;S}. The pairing with δ_irr is derived as 12 times the λ entry.
    """

    __slots__ = ()

    @property
    def lambda_pairing(self) -> Fraction:
        return self._lambda

    @property
    def delta_irr_pairing(self) -> Fraction:
        return 12 * self._lambda

    @property
    def boundary_pairings(self) -> Dict[int, Fraction]:
        return dict(self._boundary)

    def to_str(self) -> str:
        rows = [f"C·{LAMBDA_SYMBOL} = {self._lambda}"]
        for mask, value in self.boundary_items():
            labels = ",".join(str(label) for label in mask_to_labels(mask))
            rows.append(f"C·{DELTA_SYMBOL}{{{labels}}} = {value}")
        return ", ".join(rows)
