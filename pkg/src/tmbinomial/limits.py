"""Resource caps shared by every module, and the errors raised when they bite.

Caps default to values sized for desk-scale verification and can be
overridden through environment variables (``TMBINOMIAL_MAX_PREFIX`` and
friends) or programmatically with :func:`configure` / :func:`override`.
"""
from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, fields, replace
from typing import Iterator


class ResourceCapExceeded(RuntimeError):
    """A computation would exceed one of the configured :class:`Limits`."""

    def __init__(self, cap: str, requested: int, limit: int):
        super().__init__(f"{cap}: requested {requested}, limit {limit}")
        self.cap = cap
        self.requested = requested
        self.limit = limit


@dataclass(frozen=True)
class Limits:
    max_prefix: int = 2_000_000
    max_signature_domain: int = 200_000
    max_factor_length: int = 5_000
    max_certificate_exponent: int = 16


ENV_PREFIX = "TMBINOMIAL_"


def _from_env() -> Limits:
    values = {}
    for f in fields(Limits):
        raw = os.environ.get(ENV_PREFIX + f.name.upper())
        if raw is not None:
            value = int(raw)
            if value <= 0:
                raise ValueError(f"{ENV_PREFIX}{f.name.upper()} must be positive")
            values[f.name] = value
    return Limits(**values)


_current = _from_env()


def current() -> Limits:
    return _current


def configure(**caps: int) -> Limits:
    """Replace some caps globally; returns the new limits."""
    global _current
    for name, value in caps.items():
        if value <= 0:
            raise ValueError(f"cap {name} must be positive, got {value}")
    _current = replace(_current, **caps)
    return _current


@contextmanager
def override(**caps: int) -> Iterator[Limits]:
    global _current
    saved = _current
    try:
        yield configure(**caps)
    finally:
        _current = saved


def check(cap: str, requested: int) -> None:
    limit = getattr(_current, cap)
    if requested > limit:
        raise ResourceCapExceeded(cap, requested, limit)
