import os
from unittest import mock

import pytest

from genusonedivisors.errors import (
    InvalidDimensionException,
    ModulusTooLargeException,
    NotADivisorException,
    NotPositiveException,
)
from genusonedivisors.hain_divisor import component_count, sigma_fn
from genusonedivisors.models import LatticePoint, MonodromyOrbit
from genusonedivisors.models.constants import MAX_TORSION_MODULUS_ENV_VARIABLE
from genusonedivisors.torsion_lab import check_modulus, exact_order_count, monodromy_orbits, orbit_invariant


@pytest.mark.parametrize("t, modulus, expected", [(1, 6, 1), (2, 6, 3), (3, 6, 8), (6, 6, 24), (4, 12, 12)])
def test_exact_order_count(t, modulus, expected):
    assert exact_order_count(t, modulus) == expected


def test_exact_order_count_matches_sigma():
    for modulus in (8, 12, 30):
        counts = [exact_order_count(t, modulus) for t in range(1, modulus + 1) if modulus % t == 0]
        assert sum(counts) == modulus * modulus
        for t in range(1, modulus + 1):
            if modulus % t == 0:
                assert exact_order_count(t, modulus) == sigma_fn(t)


def test_exact_order_count_rejects_non_divisor():
    with pytest.raises(NotADivisorException):
        exact_order_count(4, 6)


def test_orbit_invariant():
    assert orbit_invariant(LatticePoint(0, 0, 4), 4) == 4
    assert orbit_invariant(LatticePoint(2, 0, 4), 4) == 2
    assert orbit_invariant(LatticePoint(3, 2, 4), 4) == 1


def test_monodromy_orbits():
    orbits = monodromy_orbits(4)
    assert [(orbit.invariant, orbit.size) for orbit in orbits] == [(4, 1), (2, 3), (1, 12)]
    assert sorted(orbits[1].members) == [(0, 2), (2, 0), (2, 2)]
    assert orbits[0].to_dict() == {"k": 4, "size": 1, "representative": [0, 0]}


def test_monodromy_orbits_prime():
    orbits = monodromy_orbits(5)
    assert [(orbit.invariant, orbit.size) for orbit in orbits] == [(5, 1), (1, 24)]


def test_orbits_count_components():
    for a in range(2, 16):
        orbits = monodromy_orbits(a)
        assert len(orbits) - 1 == component_count((a, -a))
        for orbit in orbits:
            assert all(orbit_invariant(LatticePoint(x, y, a), a) == orbit.invariant for x, y in orbit.members)
            assert orbit.size == sigma_fn(a // orbit.invariant)


def test_check_modulus_errors():
    with pytest.raises(NotPositiveException):
        check_modulus(0)
    with pytest.raises(NotPositiveException):
        monodromy_orbits(-3)


def test_modulus_cap_from_environment():
    with mock.patch.dict(os.environ, {MAX_TORSION_MODULUS_ENV_VARIABLE: "10"}):
        assert check_modulus(10) == 10
        with pytest.raises(ModulusTooLargeException):
            monodromy_orbits(11)


def test_lattice_point_must_be_reduced():
    with pytest.raises(InvalidDimensionException):
        LatticePoint(4, 0, 4)
    with pytest.raises(InvalidDimensionException):
        LatticePoint(0, 0, 0)


def test_orbit_to_dict():
    orbit = monodromy_orbits(4)[1]
    data = orbit.to_dict()
    assert data == {"k": 2, "size": 3, "representative": [0, 2], "modulus": 4}
    restored = MonodromyOrbit.from_dict(data)
    assert restored == orbit
    assert restored.members == ()
    assert restored.to_dict() == data
