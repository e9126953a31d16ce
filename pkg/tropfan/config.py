"""Runtime configuration: thread pool size, logging format and paths."""

import logging
import os

from tropfan.errors import InputError

THREADS_ENV = 'TROPFAN_THREADS'
DEFAULT_THREADS = 1
LOG_FORMAT = '[%(levelname)s] %(message)s'
JSON_INDENT = 4
FIXTURES_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'fixtures')


def resolve_threads(cli_value=None):
    """Return the worker count: --threads, then TROPFAN_THREADS, then 1."""
    raw = cli_value if cli_value is not None else os.environ.get(THREADS_ENV)
    if raw is None or raw == '':
        return DEFAULT_THREADS
    try:
        threads = int(raw)
    except (TypeError, ValueError) as error:
        raise InputError(f"invalid thread count {raw!r}") from error
    if threads < 1:
        raise InputError(f"thread count must be positive, got {threads}")
    return threads


def configure_logging(verbose=False):
    """Install the bracketed level format on the root logger."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        force=True,
    )
