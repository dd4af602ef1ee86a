# Author: Victor
# Page name: test_config.py
# Page purpose: Tests for environment settings
# Date of creation: 2026-10-16
import pytest
from pydantic import ValidationError

from config import ENV_DIGITS, ENV_GUARD_BITS, ENV_LOG_LEVEL, ENV_THREADS, load_settings


def test_defaults():
    settings = load_settings({})
    assert settings.default_digits == 100
    assert settings.guard_bits == 96
    assert settings.log_level == "WARNING"
    assert settings.threads >= 1


def test_values_from_environment():
    settings = load_settings({ENV_THREADS: "4", ENV_DIGITS: "250", ENV_GUARD_BITS: "128", ENV_LOG_LEVEL: "debug"})
    assert settings.threads == 4
    assert settings.default_digits == 250
    assert settings.guard_bits == 128
    assert settings.log_level == "DEBUG"
    assert not settings.sequential


def test_zero_threads_means_sequential():
    assert load_settings({ENV_THREADS: "0"}).sequential


def test_blank_values_are_ignored():
    assert load_settings({ENV_DIGITS: "  "}).default_digits == 100


@pytest.mark.parametrize("environ", [
    {ENV_THREADS: "-1"},
    {ENV_THREADS: "many"},
    {ENV_DIGITS: "0"},
    {ENV_GUARD_BITS: "32"},
    {ENV_LOG_LEVEL: "loud"},
])
def test_invalid_values(environ):
    with pytest.raises(ValidationError):
        load_settings(environ)
