from dataclasses import dataclass
from fractions import Fraction

from genusonedivisors.utils import format_rational


@dataclass(frozen=True)
class FamilyInvariants:
    """Standard intersection numbers on the total space of a family"""

    omega_sq: Fraction
    sigma_i_dot_sigma_j: Fraction
    omega_dot_sigma_i: Fraction
    psi_degree_i: Fraction

    def to_dict(self) -> dict:
        return {
            "omega_sq": format_rational(self.omega_sq),
            "sigma_i_dot_sigma_j": format_rational(self.sigma_i_dot_sigma_j),
            "omega_dot_sigma_i": format_rational(self.omega_dot_sigma_i),
            "psi_degree_i": format_rational(self.psi_degree_i),
        }
