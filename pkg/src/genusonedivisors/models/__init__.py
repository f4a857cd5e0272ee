# import models into model package
from genusonedivisors.models.age_profile import AgeProfile
from genusonedivisors.models.age_verdict import AgeVerdict, ProfileAge
from genusonedivisors.models.certificate_report import Assumption, CertificateReport
from genusonedivisors.models.check_result import CheckResult
from genusonedivisors.models.constraint_report import ConstraintReport
from genusonedivisors.models.curve_class import CurveClass
from genusonedivisors.models.divisor_class import DivisorClass
from genusonedivisors.models.family_data import FamilyData
from genusonedivisors.models.family_invariants import FamilyInvariants
from genusonedivisors.models.lattice_point import LatticePoint
from genusonedivisors.models.monodromy_orbit import MonodromyOrbit
from genusonedivisors.models.permutation import Permutation
from genusonedivisors.models.reduction_trace import Move, ReductionTrace
from genusonedivisors.models.signature import Signature
from genusonedivisors.models.sym_curve_class import SymCurveClass
from genusonedivisors.models.sym_divisor_class import SymDivisorClass

__all__ = [
    "AgeProfile",
    "AgeVerdict",
    "Assumption",
    "CertificateReport",
    "CheckResult",
    "ConstraintReport",
    "CurveClass",
    "DivisorClass",
    "FamilyData",
    "FamilyInvariants",
    "LatticePoint",
    "MonodromyOrbit",
    "Move",
    "Permutation",
    "ProfileAge",
    "ReductionTrace",
    "Signature",
    "SymCurveClass",
    "SymDivisorClass",
]
