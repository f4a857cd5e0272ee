import logging
import os
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Tuple, Union

from genusonedivisors.models.constants import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_MAX_POINTS,
    DEFAULT_MAX_TORSION_MODULUS,
    DEFAULT_VERIFY_SEED,
    LOG_LEVEL_ENV_VARIABLE,
    MAX_POINTS_ENV_VARIABLE,
    MAX_TORSION_MODULUS_ENV_VARIABLE,
    VERIFY_SEED_ENV_VARIABLE,
)

Rational = Union[int, Fraction, str]


def _positive_int_from_env(name: str, default: int) -> int:
    raw_value = os.getenv(name, "").strip()
    if raw_value.isnumeric():
        value = int(raw_value)
        return value if value else default
    return default


def get_max_points() -> int:
    """Get the largest marked-point count a class may be built for"""
    return _positive_int_from_env(MAX_POINTS_ENV_VARIABLE, DEFAULT_MAX_POINTS)


def get_seed() -> int:
    """Get the seed used by the random verification sweeps"""
    raw_seed = os.getenv(VERIFY_SEED_ENV_VARIABLE, "").strip()
    if raw_seed.isnumeric():
        return int(raw_seed)
    return DEFAULT_VERIFY_SEED


def get_max_torsion_modulus() -> int:
    """Get the largest modulus torsion enumeration will accept"""
    return _positive_int_from_env(MAX_TORSION_MODULUS_ENV_VARIABLE, DEFAULT_MAX_TORSION_MODULUS)


def get_log_level() -> int:
    raw_level = os.getenv(LOG_LEVEL_ENV_VARIABLE, DEFAULT_LOG_LEVEL).strip().upper()
    level = logging.getLevelName(raw_level)
    if isinstance(level, int):
        return level
    return logging.getLevelName(DEFAULT_LOG_LEVEL)


def to_fraction(value: Rational) -> Fraction:
    """Coerce an int, Fraction or "p/q" string into an exact Fraction

    Raises:
        ValueError: if the value is a float or an unparsable string
    """
    if isinstance(value, float):
        raise ValueError(f"refusing inexact value {value!r}")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Lowest-terms "p/q" with q > 0; zero is "0/1"."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def labels_to_mask(labels: Iterable[int]) -> int:
    mask = 0
    for label in labels:
        mask |= 1 << (label - 1)
    return mask


@lru_cache(maxsize=None)
def mask_to_labels(mask: int) -> Tuple[int, ...]:
    labels = []
    label = 1
    while mask:
        if mask & 1:
            labels.append(label)
        mask >>= 1
        label += 1
    return tuple(labels)


def subset_sort_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Order subsets by size, then lexicographically by their labels"""
    labels = mask_to_labels(mask)
    return len(labels), labels


@lru_cache(maxsize=64)
def boundary_masks(n: int) -> Tuple[int, ...]:
    """Every subset S of {1..n} with |S| >= 2, in (size, lex) order

    Returns:
        tuple: bitmasks, bit i-1 standing for label i
    """
    masks: List[int] = []
    for size in range(2, n + 1):
        for labels in combinations(range(1, n + 1), size):
            masks.append(labels_to_mask(labels))
    return tuple(masks)
