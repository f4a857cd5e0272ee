import logging
import os
from unittest import mock

import pytest

from genusonedivisors.config import DEFAULT_SWEEPS, VerifyConfig
from genusonedivisors.errors import InvalidDimensionException
from genusonedivisors.models.constants import (
    DEFAULT_MAX_POINTS,
    DEFAULT_VERIFY_SEED,
    LOG_LEVEL_ENV_VARIABLE,
    MAX_POINTS_ENV_VARIABLE,
    VERIFY_SEED_ENV_VARIABLE,
)
from genusonedivisors.utils import get_log_level, get_max_points, get_seed


def test_verify_config_defaults():
    config = VerifyConfig()
    args = config.get_sweep_args("certificate_pairing")

    assert config.workers == 1
    assert args == {"bound": 30, "samples": 0}


def test_verify_config_with_max_bound():
    config = VerifyConfig(max_bound=8)

    assert config.get_sweep_args("sigma_identity") == {"bound": 8, "samples": 0}
    assert config.get_sweep_args("sym_cone") == {"bound": 8, "samples": 10000}
    assert config.get_sweep_args("grr_coherence") == {"bound": 5, "samples": 200}


def test_verify_config_override_wins_over_cap():
    # overrides are taken as given, even above max_bound
    config = VerifyConfig(max_bound=8, signature_reduction=50)

    assert config.get_sweep_args("signature_reduction")["bound"] == 50
    assert config.get_sweep_args("ray_family")["bound"] == 8


def test_verify_config_rejects_bad_arguments():
    with pytest.raises(InvalidDimensionException):
        VerifyConfig(workers=0)
    with pytest.raises(InvalidDimensionException):
        VerifyConfig(max_bound=0)
    with pytest.raises(InvalidDimensionException):
        VerifyConfig(not_a_check=3)


def test_every_check_has_a_sweep():
    for check in DEFAULT_SWEEPS:
        assert set(VerifyConfig().get_sweep_args(check)) == {"bound", "samples"}


def test_seed_from_environment():
    with mock.patch.dict(os.environ, {VERIFY_SEED_ENV_VARIABLE: "42"}):
        assert get_seed() == 42
        assert VerifyConfig().seed == 42
    assert VerifyConfig(seed=7).seed == 7


def test_seed_default():
    with mock.patch.dict(os.environ, {VERIFY_SEED_ENV_VARIABLE: "not a number"}):
        assert get_seed() == DEFAULT_VERIFY_SEED


def test_max_points_from_environment():
    with mock.patch.dict(os.environ, {MAX_POINTS_ENV_VARIABLE: "9"}):
        assert get_max_points() == 9
    with mock.patch.dict(os.environ, {MAX_POINTS_ENV_VARIABLE: "0"}):
        assert get_max_points() == DEFAULT_MAX_POINTS
    with mock.patch.dict(os.environ, {MAX_POINTS_ENV_VARIABLE: "-4"}):
        assert get_max_points() == DEFAULT_MAX_POINTS


def test_log_level_from_environment():
    with mock.patch.dict(os.environ, {LOG_LEVEL_ENV_VARIABLE: "debug"}):
        assert get_log_level() == logging.DEBUG
    with mock.patch.dict(os.environ, {LOG_LEVEL_ENV_VARIABLE: "chatty"}):
        assert get_log_level() == logging.WARNING
