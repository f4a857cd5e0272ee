from fractions import Fraction
from typing import Dict

from genusonedivisors.models.boundary_vector import SparseBoundaryVector


class DivisorClass(SparseBoundaryVector):
    """Rational divisor class on the n-pointed genus-one moduli space,
    written in the basis λ, δ_{0;S} (|S| >= 2). δ_irr is not a basis
    element; it is 12λ.
    """

    __slots__ = ()

    @property
    def lambda_coeff(self) -> Fraction:
        return self._lambda

    @property
    def boundary_coeffs(self) -> Dict[int, Fraction]:
        return dict(self._boundary)
