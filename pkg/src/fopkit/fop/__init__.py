from fopkit.fop.engine import (
    DedupKey,
    FopRecord,
    FopRun,
    FopStats,
    GapStats,
    SweepOrder,
    gap_stats,
    run_fop,
    run_fop_multi,
    sweep_raw,
)
from fopkit.fop.families import (
    PolyFamily,
    RadicalFamily,
    ResidueFilter,
    TraceMap,
    norm_family,
    radical_family,
    units_family,
)
from fopkit.fop.powers import PowersRun, TraceKind, expected_exponent, verify_powers

__all__ = [
    "DedupKey",
    "SweepOrder",
    "FopRecord",
    "FopRun",
    "FopStats",
    "GapStats",
    "run_fop",
    "run_fop_multi",
    "sweep_raw",
    "gap_stats",
    "PolyFamily",
    "RadicalFamily",
    "ResidueFilter",
    "TraceMap",
    "radical_family",
    "units_family",
    "norm_family",
    # Exponent verification
    "TraceKind",
    "PowersRun",
    "expected_exponent",
    "verify_powers",
]
