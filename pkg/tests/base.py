"""Shared base test utilities for the tropfan test suite."""

import os
import tempfile
import unittest

from tropfan.cli_io import parse_fan
from tropfan.config import FIXTURES_DIR
from tropfan.exact_linalg import Ring


def fixture_path(name):
    """Absolute path of a golden document."""
    return os.path.join(FIXTURES_DIR, name)


def load_fixture(name, ring=None):
    """Parse a golden fan, optionally re-read over another ring."""
    wf = parse_fan(fixture_path(name))
    if ring is not None:
        wf = wf.with_ring(Ring.parse(ring))
    return wf


class BaseTestCase(unittest.TestCase):
    """Base class that prints the running test and its description."""

    def setUp(self):
        """Print test description before each test."""
        print(f"\n▶  {self._testMethodName}: {self._testMethodDoc}")


class BaseTempFileTest(BaseTestCase):
    """Base class that gives every test its own temporary directory."""

    def setUp(self):
        """Create the temporary directory and register its removal."""
        super().setUp()
        self.tempdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tempdir.cleanup)

    def temp_path(self, name):
        """Path of a file inside the temporary directory."""
        return os.path.join(self.tempdir.name, name)
