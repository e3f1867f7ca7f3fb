from fopkit.schemas.records import GapRow, RecordRow, ScanRow
from fopkit.schemas.run_config import RAW_COMMANDS, OutputFormat, RunConfig

__all__ = [
    "RecordRow",
    "GapRow",
    "ScanRow",
    "RunConfig",
    "OutputFormat",
    "RAW_COMMANDS",
]
