"""Recursive upper bounds for two-colour Ramsey numbers R(m, n)."""
from .bounds import (
    ArithmeticOverflow,
    BoundEntry,
    BoundsTable,
    MethodParams,
    Provenance,
    RamseyPoint,
    base_value,
    get_params,
    ingest_seeds,
    load_seeds,
)
from .classical import gg_upper
from .edges import EdgeBounds, edge_bounds, edge_bounds_degenerate
from .engine import DerivationRecord, run_fixpoint, smallest_failing_p
from .triangle import hwplus_holds, hwplus_rhs, mymain_holds

__all__ = [
    "ArithmeticOverflow",
    "BoundEntry",
    "BoundsTable",
    "DerivationRecord",
    "EdgeBounds",
    "MethodParams",
    "Provenance",
    "RamseyPoint",
    "base_value",
    "edge_bounds",
    "edge_bounds_degenerate",
    "get_params",
    "gg_upper",
    "hwplus_holds",
    "hwplus_rhs",
    "ingest_seeds",
    "load_seeds",
    "mymain_holds",
    "run_fixpoint",
    "smallest_failing_p",
]
