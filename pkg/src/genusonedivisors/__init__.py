from genusonedivisors import models
from genusonedivisors.class_algebra import canonical_class, delta_irr_class, lambda_class, pair, psi_class, relabel
from genusonedivisors.config import VerifyConfig
from genusonedivisors.hain_divisor import component_class, component_count, decompose, hain_class, sigma_fn
from genusonedivisors.forgetful import pullback
from genusonedivisors.serializer import Serializer

__all__ = [
    "VerifyConfig",
    "Serializer",
    "canonical_class",
    "component_class",
    "component_count",
    "decompose",
    "delta_irr_class",
    "hain_class",
    "lambda_class",
    "models",
    "pair",
    "psi_class",
    "pullback",
    "relabel",
    "sigma_fn",
]
