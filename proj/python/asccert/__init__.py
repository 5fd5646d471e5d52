"""Construction and exact certification of the small-cut cover LP counterexample."""

from ._asccert import (  # noqa: F401
    DimensionError,
    EnumerationError,
    InvalidK,
    build_instance,
    circulant,
    det,
    export_lp,
    incidence_matrix,
    probe,
    rank,
    reduce,
    small_cuts,
    to_dot,
    verify,
)

__all__ = [
    "DimensionError",
    "EnumerationError",
    "InvalidK",
    "build_instance",
    "circulant",
    "det",
    "export_lp",
    "incidence_matrix",
    "probe",
    "rank",
    "reduce",
    "small_cuts",
    "to_dot",
    "verify",
]
