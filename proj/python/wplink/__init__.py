"""Exact classification of links of weighted homogeneous hypersurface
singularities in four variables.

Everything is computed in exact arithmetic.  Reports and search certificates
are plain dicts mirroring the CLI's JSON output.
"""

from ._core import (
    alexander_divisor,
    betti2,
    betti2_oracle,
    case_I,
    case_II,
    classify,
    curve_genus,
    cyclic_instance,
    cyclic_weights,
    search,
)

__all__ = [
    "alexander_divisor",
    "betti2",
    "betti2_oracle",
    "case_I",
    "case_II",
    "classify",
    "curve_genus",
    "cyclic_instance",
    "cyclic_weights",
    "search",
]
