"""Size guards shared by the enumerators and the command line."""
from __future__ import annotations

import os
from contextlib import contextmanager

HARD_CEILING = 14
DEFAULT_N_MAX = 10


class ResourceGuardError(ValueError):
    """Raised when a requested rank exceeds the configured guard."""


def n_max() -> int:
    raw = os.environ.get("SILTEDAN_N_MAX")
    value = int(raw) if raw else DEFAULT_N_MAX
    return min(value, HARD_CEILING)


def check_n(n: int, limit: int | None = None) -> None:
    limit = n_max() if limit is None else min(limit, HARD_CEILING)
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"rank must be a positive integer, got {n!r}")
    if n > limit:
        raise ResourceGuardError(f"n = {n} exceeds the guard n_max = {limit}")


@contextmanager
def guard(limit: int):
    """Temporarily set the guard used by the enumerators."""
    old = os.environ.get("SILTEDAN_N_MAX")
    os.environ["SILTEDAN_N_MAX"] = str(limit)
    try:
        yield
    finally:
        if old is None:
            del os.environ["SILTEDAN_N_MAX"]
        else:
            os.environ["SILTEDAN_N_MAX"] = old
