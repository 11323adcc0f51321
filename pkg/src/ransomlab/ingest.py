"""Loading and validation of JSON input documents.

All ingestion is strict: unknown keys, missing keys, and out-of-range values
are rejected with messages naming the offending key, never coerced or
clamped. Documents are UTF-8 JSON; numeric fields accept integers or
decimals.

Profile documents pair a display name with the nine scenario variables,
keyed by their uppercase letters::

    {"name": "Company A", "variables": {"A": 20, "B": 25, ..., "I": 15}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ValidationError
from .scoring import TraitProfile
from .simnet import Network, network_from_dict
from .strategies import StrategyCatalog, catalog_from_dict

__all__ = [
    "ProfileDocument",
    "VARIABLE_KEYS",
    "parse_profile_document",
    "profile_document_to_dict",
    "load_profile_document",
    "load_profile",
    "load_catalog",
    "load_network",
    "load_json",
]

VARIABLE_KEYS = ("A", "B", "C", "D", "E", "F", "G", "H", "I")


@dataclass(frozen=True)
class ProfileDocument:
    """A named trait profile as stored on disk."""

    name: str
    profile: TraitProfile


def parse_profile_document(data: dict) -> ProfileDocument:
    """Parse and validate a profile document."""
    if not isinstance(data, dict):
        raise ValidationError("profile document must be a JSON object")
    for key in ("name", "variables"):
        if key not in data:
            raise ValidationError(f"profile document missing key '{key}'")
    extra = set(data) - {"name", "variables"}
    if extra:
        raise ValidationError(f"profile document has unknown keys: {sorted(extra)}")
    if not isinstance(data["name"], str):
        raise ValidationError("'name' must be a string")
    variables = data["variables"]
    if not isinstance(variables, dict):
        raise ValidationError("'variables' must be a JSON object")
    missing = [k for k in VARIABLE_KEYS if k not in variables]
    if missing:
        raise ValidationError(f"'variables' missing keys: {missing}")
    unknown = sorted(set(variables) - set(VARIABLE_KEYS))
    if unknown:
        raise ValidationError(f"'variables' has unknown keys: {unknown}")
    profile = TraitProfile(**{k.lower(): variables[k] for k in VARIABLE_KEYS})
    return ProfileDocument(name=data["name"], profile=profile)


def profile_document_to_dict(doc: ProfileDocument) -> dict:
    """JSON-ready document for a named profile."""
    p = doc.profile
    return {
        "name": doc.name,
        "variables": {k: getattr(p, k.lower()) for k in VARIABLE_KEYS},
    }


def load_json(path: str | Path) -> dict:
    """Read a UTF-8 JSON object from disk, reporting parse position on failure."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ValidationError(f"{path}: file not found") from None
    except OSError as exc:
        raise ValidationError(f"{path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ValidationError(f"{path}: top-level value must be a JSON object")
    return data


def _with_context(path: Path, fn, data: dict):
    try:
        return fn(data)
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None


def load_profile_document(path: str | Path) -> ProfileDocument:
    """Load a named profile document from disk."""
    path = Path(path)
    return _with_context(path, parse_profile_document, load_json(path))


def load_profile(path: str | Path) -> TraitProfile:
    """Load and validate a trait profile from a profile document file."""
    return load_profile_document(path).profile


def load_catalog(path: str | Path) -> StrategyCatalog:
    """Load and validate a strategy catalog file."""
    path = Path(path)
    return _with_context(path, catalog_from_dict, load_json(path))


def load_network(path: str | Path) -> Network:
    """Load and validate a network file."""
    path = Path(path)
    return _with_context(path, network_from_dict, load_json(path))
