"""Unit tests for runtime settings."""

import json

import pytest

from pairing_functions.enums import CheckStrictness
from pairing_functions.errors import DocumentError
from pairing_functions.settings import (
    DEFAULT_GALLOP_CAP,
    DEFAULT_SAMPLE_BUDGET,
    Settings,
    default_settings,
)


class TestSettings:
    """Test Settings defaults, loading and validation"""

    def test_defaults(self):
        """Test the default limits"""
        settings = default_settings()
        assert settings.gallop_cap == DEFAULT_GALLOP_CAP == 2**64
        assert settings.sample_budget == DEFAULT_SAMPLE_BUDGET
        assert settings.strictness == CheckStrictness.PERMISSIVE
        assert settings.log_level == "WARNING"

    def test_partial_file(self, json_file):
        """Test a file may override a subset of the settings"""
        path = json_file(json.dumps({"gallop_cap": 1024, "contract_check": "strict"}))
        settings = Settings.from_file(path)
        assert settings.gallop_cap == 1024
        assert settings.strictness == CheckStrictness.STRICT
        assert settings.sample_budget == DEFAULT_SAMPLE_BUDGET

    @pytest.mark.parametrize(
        "data,field_name",
        [
            ({"gallop_cap": 0}, "gallop_cap"),
            ({"sample_budget": -1}, "sample_budget"),
            ({"contract_sample_bound": -5}, "contract_sample_bound"),
            ({"contract_check": "sloppy"}, "contract_check"),
            ({"log_level": "loud"}, "log_level"),
            ({"sample_seed": "zero"}, "sample_seed"),
            ({"verbose": True}, "verbose"),
        ],
    )
    def test_validation(self, data, field_name):
        """Test invalid settings name the field"""
        with pytest.raises(DocumentError) as exc_info:
            Settings.from_dict(data)
        assert exc_info.value.field == field_name

    def test_log_level_any_case(self):
        """Test level names are accepted in lower case"""
        assert Settings.from_dict({"log_level": "debug"}).log_level == "debug"
