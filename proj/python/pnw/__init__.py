"""Prefix normal words."""

from ._core import (
    CapExceeded,
    PreconditionError,
    compute_phi,
    count,
    critical_prefix,
    critset,
    critset_count,
    density_profile,
    detect_period,
    extend,
    flipext,
    generate,
    is_prefix_normal,
)

__all__ = [
    "CapExceeded",
    "PreconditionError",
    "compute_phi",
    "count",
    "critical_prefix",
    "critset",
    "critset_count",
    "density_profile",
    "detect_period",
    "extend",
    "flipext",
    "generate",
    "is_prefix_normal",
]
