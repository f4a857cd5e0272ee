import random
from fractions import Fraction

import pytest

from genusonedivisors.errors import InvalidProfileException
from genusonedivisors.models import AgeProfile, AgeVerdict
from genusonedivisors.reid_tai import (
    EXTENDS,
    UNDECIDED,
    age,
    fixture_profiles,
    is_ambiguous,
    is_quasi_reflection,
    profile_report,
    reid_tai_check,
)


def _random_profile(rng: random.Random, k: int) -> AgeProfile:
    return AgeProfile(k, tuple(rng.randrange(k) for _ in range(rng.randint(1, 6))))


def test_age():
    assert age(AgeProfile(2, (1, 1))) == 1
    assert age(AgeProfile(3, (1, 2, 0))) == 1
    assert age(AgeProfile(4, (1, 2, 1))) == 1
    assert age(AgeProfile(6, (1,))) == Fraction(1, 6)


def test_age_adds_over_concatenation():
    rng = random.Random(11)
    for _ in range(500):
        k = rng.randint(2, 12)
        first, second = _random_profile(rng, k), _random_profile(rng, k)
        joined = AgeProfile(k, first.exps + second.exps)
        assert age(joined) == age(first) + age(second), (first, second)


def test_age_plus_inverse_counts_nontrivial_eigenvalues():
    rng = random.Random(12)
    for _ in range(500):
        profile = _random_profile(rng, rng.randint(2, 12))
        assert age(profile) + age(profile.inverse()) == len(profile.nonzero_exps), profile


def test_fixture_ages():
    fixtures = fixture_profiles()
    assert len(fixtures) == 6
    for name, profile, expected in fixtures:
        assert age(profile) == expected, name


def test_quasi_reflection():
    assert is_quasi_reflection(AgeProfile(2, (1, 0, 0)))
    assert not is_quasi_reflection(AgeProfile(2, (1, 1)))
    assert not is_ambiguous(AgeProfile(2, (1,)))
    assert is_ambiguous(AgeProfile(4, (2, 0)))


def test_profile_report():
    report = profile_report(AgeProfile(2, (1,)))
    assert report.age == Fraction(1, 2)
    assert report.age_is_one_over_k
    assert report.to_dict() == {
        "profile": {"k": 2, "exps": [1]},
        "age": "1/2",
        "quasi_reflection": True,
        "ambiguous": False,
        "age_is_one_over_k": True,
    }


def test_reid_tai_check_skips_quasi_reflections():
    result = reid_tai_check([AgeProfile(2, (1, 1)), AgeProfile(2, (1,))])
    assert result.verdict == EXTENDS
    assert result.extends
    assert result.minimum_age == Fraction(1, 2)
    assert len(result.profiles) == 2


def test_reid_tai_check_undecided():
    result = reid_tai_check([AgeProfile(3, (1, 0, 1))])
    assert result.verdict == UNDECIDED
    assert not result.extends
    assert result.minimum_age == Fraction(2, 3)


def test_reid_tai_check_empty():
    result = reid_tai_check([])
    assert result.minimum_age is None
    assert result.to_dict() == {"profiles": [], "minimum_age": None, "verdict": EXTENDS}


def test_age_verdict_from_dict():
    result = reid_tai_check([profile for _, profile, _ in fixture_profiles()])
    restored = AgeVerdict.from_dict(result.to_dict())
    assert restored == result
    assert restored.to_dict() == result.to_dict()


def test_inverse_profile():
    profile = AgeProfile(4, (1, 2, 1))
    assert profile.inverse() == AgeProfile(4, (3, 2, 3))
    assert age(profile.inverse()) == 2


def test_invalid_profiles():
    with pytest.raises(InvalidProfileException):
        AgeProfile(1, (0,))
    with pytest.raises(InvalidProfileException):
        AgeProfile(3, ())
    with pytest.raises(InvalidProfileException):
        AgeProfile(3, (3,))
