"""Pytest configuration: project root on sys.path and a serial default pool."""

import os
import sys

ROOT = os.path.abspath(os.path.dirname(__file__))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

# tests that need threads pass --threads or patch the variable themselves
os.environ.pop('TROPFAN_THREADS', None)
