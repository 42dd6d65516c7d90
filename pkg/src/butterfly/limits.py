"""Resource guard for exhaustive enumeration streams.

Exhaustive streams grow like 4^n for trees and paths and faster for chains,
so each stream kind carries a default size cap chosen to keep desk-scale
runs under a minute. The ``BUTTERFLY_MAX_N`` environment variable, when set,
overrides every cap at once.
"""

from __future__ import annotations

import os

from .errors import CapacityError, DomainError

ENV_VAR = "BUTTERFLY_MAX_N"

DEFAULT_CAPS = {"trees": 14, "paths": 10, "chains": 8}


def cap_for(kind: str) -> int:
    """Current cap for the given stream kind ("trees", "paths", "chains")."""
    if kind not in DEFAULT_CAPS:
        raise DomainError(f"unknown enumeration kind {kind!r}")
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_CAPS[kind]
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{ENV_VAR} must be an integer, got {raw!r}") from None


def ensure_within(kind: str, n: int) -> None:
    """Raise :class:`CapacityError` if an exhaustive run at size ``n`` is too big."""
    cap = cap_for(kind)
    if n > cap:
        raise CapacityError(
            f"exhaustive {kind} stream at n={n} exceeds cap {cap}; "
            f"set {ENV_VAR} to override"
        )
