"""Enumeration over the torsion points (Z/N)^2 of a square torus.

Used as an oracle for σ and for the component counts of D_a: the
monodromy of the universal curve moves a torsion point (x, y) to
(x + y, y) and to (x, x + y).
"""
import logging
from collections import deque
from math import gcd
from typing import List

import numpy as np

from genusonedivisors.errors import ModulusTooLargeException, NotADivisorException, NotPositiveException
from genusonedivisors.models import LatticePoint, MonodromyOrbit
from genusonedivisors.utils import get_max_torsion_modulus

logger = logging.getLogger(__name__)


def check_modulus(modulus: int) -> int:
    """Raises:
        NotPositiveException: modulus < 1
        ModulusTooLargeException: modulus exceeds GENUSONE_MAX_TORSION_MODULUS
    """
    if not isinstance(modulus, int) or isinstance(modulus, bool) or modulus < 1:
        raise NotPositiveException(f"modulus must be a positive integer, got {modulus!r}")
    cap = get_max_torsion_modulus()
    if modulus > cap:
        raise ModulusTooLargeException(f"modulus {modulus} exceeds the configured cap {cap}")
    return modulus


def exact_order_count(t: int, modulus: int) -> int:
    """Number of points of (Z/N)^2 of exact additive order t

    Raises:
        NotADivisorException: t does not divide N
    """
    check_modulus(modulus)
    if not isinstance(t, int) or t < 1 or modulus % t:
        raise NotADivisorException(f"{t!r} does not divide {modulus}")
    residues = np.arange(modulus, dtype=np.int64)
    common = np.gcd(np.gcd.outer(residues, residues), modulus)
    return int(np.count_nonzero(modulus // common == t))


def orbit_invariant(point: LatticePoint, a: int) -> int:
    """gcd(x, y, a), with gcd(0, 0, a) = a"""
    return gcd(gcd(point.x, point.y), a)


def monodromy_orbits(a: int) -> List[MonodromyOrbit]:
    """Orbits of the group generated by the two shears on (Z/a)^2

    Breadth-first closure from each unvisited point in row-major order.
    Orbits are returned by decreasing invariant.
    """
    check_modulus(a)
    visited = np.zeros((a, a), dtype=bool)
    orbits = []
    for start_x in range(a):
        for start_y in range(a):
            if visited[start_x, start_y]:
                continue
            visited[start_x, start_y] = True
            queue = deque([(start_x, start_y)])
            members = []
            while queue:
                x, y = queue.popleft()
                members.append((x, y))
                for nx, ny in (((x + y) % a, y), (x, (x + y) % a)):
                    if not visited[nx, ny]:
                        visited[nx, ny] = True
                        queue.append((nx, ny))
            representative = LatticePoint(start_x, start_y, a)
            invariant = orbit_invariant(representative, a)
            orbits.append(MonodromyOrbit(invariant, representative, len(members), tuple(members)))
    orbits.sort(key=lambda orbit: -orbit.invariant)
    logger.debug("found %d monodromy orbits on (Z/%d)^2", len(orbits), a)
    return orbits
