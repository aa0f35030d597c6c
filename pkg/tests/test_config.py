"""
Tests for settings validation.
"""

import logging

import pytest
from pydantic import ValidationError

from colorgraph.config import Settings


class TestSettings:
    """Test environment-based settings."""

    def test_log_level_resolves(self):
        """Test level names resolve to logging constants."""
        assert Settings(_env_file=None, log_level="warning").logging_level == logging.WARNING
        assert Settings(_env_file=None, log_level="INFO").logging_level == logging.INFO

    def test_debug_overrides_level(self):
        """Test debug forces debug logging."""
        assert Settings(_env_file=None, log_level="ERROR", debug=True).logging_level == logging.DEBUG

    def test_unknown_level(self):
        """Test unknown level names are rejected."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, log_level="chatty")

    def test_non_positive_cap(self):
        """Test caps must be positive."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, closure_cap=0)

    def test_env_prefix(self, monkeypatch):
        """Test settings read COLORGRAPH_ variables."""
        monkeypatch.setenv("COLORGRAPH_MAX_L", "5")
        assert Settings(_env_file=None).max_l == 5
