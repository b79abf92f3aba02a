"""Size caps guarding construction and subgroup enumeration.

The binding constraint is subgroup-lattice enumeration cost, not table
storage, so the enumeration cap is much tighter than the order cap. Both
accept explicit per-call overrides; the ``SOCLEKIT_MAX_ORDER`` environment
variable overrides the default order cap process-wide.
"""

from __future__ import annotations

import os

DEFAULT_ORDER_CAP = 1024
DEFAULT_LATTICE_CAP = 200
DEFAULT_E2_RANK_CAP = 7

ENV_MAX_ORDER = "SOCLEKIT_MAX_ORDER"


def effective_order_cap(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get(ENV_MAX_ORDER)
    if env is not None:
        return int(env)
    return DEFAULT_ORDER_CAP


def effective_lattice_cap(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    return DEFAULT_LATTICE_CAP
