"""Exact Dehn-Thurston coordinates of measured foliations on surfaces.

Coordinates are lists of ``{"curve": id, "m": ..., "t": ...}`` entries (or
the ``{"scope": ..., "entries": [...]}`` object form). Values may be ints,
strings such as ``"3/2"``, or :class:`fractions.Fraction`; results come
back with exact rational strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable

from . import _core
from ._core import DtcError, ParseError, ValidationError

__all__ = [
    "DtcError",
    "ParseError",
    "ValidationError",
    "act",
    "count",
    "dilatation",
    "gluing",
    "invert_word",
    "preset_names",
    "sample",
    "scan",
    "to_fraction",
    "verify_relations",
]


def _surface(surface: str | dict) -> str:
    return surface if isinstance(surface, str) else json.dumps(surface)


def _value(v: Any) -> Any:
    if isinstance(v, Fraction):
        return str(v)
    return v


def _coords(coords: Iterable[dict] | dict) -> str:
    if isinstance(coords, dict):
        doc = dict(coords)
        doc["entries"] = [{k: _value(v) for k, v in e.items()} for e in coords["entries"]]
        return json.dumps(doc)
    return json.dumps([{k: _value(v) for k, v in e.items()} for e in coords])


def to_fraction(entries: dict | list) -> dict[int, tuple[Fraction, Fraction]]:
    """{curve: (m, t)} from a coordinate document."""
    items = entries["entries"] if isinstance(entries, dict) else entries
    return {e["curve"]: (Fraction(e["m"]), Fraction(e["t"])) for e in items}


def preset_names() -> list[str]:
    return list(_core.preset_names())


def gluing(surface: str | dict) -> dict:
    return json.loads(_core.gluing(_surface(surface)))


def act(surface: str | dict, coords, word: str) -> dict:
    """Coordinates after applying ``word``, and the final decomposition."""
    return json.loads(_core.act(_surface(surface), _coords(coords), word))


def invert_word(surface: str | dict, word: str) -> str:
    return _core.invert_word(_surface(surface), word)


def count(surface: str | dict, coords) -> int:
    return _core.count(_surface(surface), _coords(coords))


def sample(surface: str | dict, bound: int, seed: int, scope: str = "MF") -> dict:
    return json.loads(_core.sample(_surface(surface), bound, seed, scope))


def dilatation(surface: str | dict, word: str, coords=None, max_iter: int = 2000, tol: str = "1e-9") -> dict:
    c = None if coords is None else _coords(coords)
    return json.loads(_core.dilatation(_surface(surface), word, c, max_iter, str(tol)))


def scan(preset: str, max_length: int, tol: str = "1e-9", threads: int = 0) -> list[dict]:
    return json.loads(_core.scan(preset, max_length, str(tol), threads))


def verify_relations(surface: str | dict, suite: str, seed: int = 1, samples: int = 1000, bound: int = 20) -> dict:
    return json.loads(_core.verify_relations(_surface(surface), suite, seed, samples, bound))
