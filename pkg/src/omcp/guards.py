"""Size guards for brute-force enumerations.

Every exhaustive routine is bounded by a default limit and raises
:class:`SizeGuardError` instead of running unbounded.  The environment
variable ``OMCP_GUARD_OVERRIDE`` raises (never lowers) all defaults at once.
"""

from __future__ import annotations

import os

# Defaults: ground-set size for 3^|E| duality scans, cube dimension for
# exhaustive face checks, cube dimension for sink-finding games, matrix
# columns for minimal-dependency enumeration, basis count for OMCP scans.
DUALITY_ELEMENTS = 12
USO_EXHAUSTIVE_DIM = 4
GAME_DIM = 6
MATRIX_COLUMNS = 14
OMCP_SCAN_DIM = 16


class SizeGuardError(RuntimeError):
    """An enumeration would exceed its configured size guard."""


def resolve(default: int, override: int | None = None) -> int:
    """Effective limit: explicit override, else env override, else default."""
    if override is not None:
        return override
    env = os.environ.get("OMCP_GUARD_OVERRIDE")
    if env:
        return max(default, int(env))
    return default


def check(value: int, default: int, override: int | None, what: str) -> None:
    limit = resolve(default, override)
    if value > limit:
        raise SizeGuardError(f"{what}={value} exceeds size guard {limit}")
