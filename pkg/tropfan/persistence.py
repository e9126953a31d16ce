"""Shared JSON file persistence for fan and matroid documents."""

import json
import os

from tropfan.config import JSON_INDENT
from tropfan.errors import InputError


def serialize_document(data):
    """Canonical JSON text: sorted keys, fixed indent, trailing newline."""
    return json.dumps(data, indent=JSON_INDENT, sort_keys=True) + '\n'


def parse_text(text, source='<text>'):
    """Decode JSON text, reporting the line and column of syntax errors."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise InputError(
            f"malformed JSON in {source} at line {error.lineno}, "
            f"column {error.colno}: {error.msg}") from error


def load_document(filepath):
    """Load a JSON document from a file."""
    try:
        with open(filepath, 'r', encoding='utf-8') as file:
            text = file.read()
    except OSError as error:
        raise InputError(f"cannot read '{filepath}': {error.strerror}") from error
    except UnicodeDecodeError as error:
        raise InputError(f"'{filepath}' is not UTF-8 text: {error.reason}") from error
    return parse_text(text, f"'{filepath}'")


def save_document(filepath, data):
    """Write a document as canonical JSON, creating parent directories."""
    directory = os.path.dirname(filepath)
    try:
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(filepath, 'w', encoding='utf-8') as file:
            file.write(serialize_document(data))
    except OSError as error:
        raise InputError(f"cannot write '{filepath}': {error.strerror}") from error
