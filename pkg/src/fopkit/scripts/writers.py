"""Record writers for the command-line scripts.

Files are written to a temporary sibling and renamed into place once complete.
"""

import csv
import io
import os
import sys
import tempfile
from collections.abc import Sequence
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from pydantic import BaseModel

from fopkit.fop.engine import FopStats
from fopkit.infrastructure.logging import get_logger
from fopkit.schemas.run_config import OutputFormat

logger = get_logger(__name__)

# rows per line of the bracketed listing
PRETTY_WIDTH = 10


@dataclass(slots=True)
class RecordTable:
    rows: Sequence[BaseModel]
    columns: tuple[str, ...]
    stats: FopStats | None = None


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(table: RecordTable, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    for row in table.rows:
        writer.writerow([_cell(getattr(row, column)) for column in table.columns])


def render_jsonl(table: RecordTable, out: TextIO) -> None:
    for row in table.rows:
        out.write(row.model_dump_json(exclude_none=True))
        out.write("\n")


def render_pretty(table: RecordTable, out: TextIO) -> None:
    """Bracketed rows as [M,r],[2,2],..., ten per line."""
    out.write(f"[{','.join(table.columns)}]=\n")
    items = ["[" + ",".join(_cell(getattr(row, column)) for column in table.columns) + "]" for row in table.rows]
    for start in range(0, len(items), PRETTY_WIDTH):
        tail = "," if start + PRETTY_WIDTH < len(items) else ""
        out.write(",".join(items[start : start + PRETTY_WIDTH]) + tail + "\n")


RENDERERS = {
    "csv": render_csv,
    "jsonl": render_jsonl,
    "pretty": render_pretty,
}


def stats_line(stats: FopStats) -> str:
    return f"# N={stats.N}, gap={stats.gap}, max_M={stats.max_M}"


@contextmanager
def atomic_open(path: Path):
    """Open a temporary file next to path; it replaces path only if the block succeeds."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as out:
            yield out
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise


def render(table: RecordTable, fmt: OutputFormat) -> str:
    buffer = io.StringIO()
    RENDERERS[fmt](table, buffer)
    return buffer.getvalue()


def write_table(table: RecordTable, fmt: OutputFormat, output: Path | None = None) -> None:
    """
    Write the rows, then the stats line.

    The stats line follows the rows on stdout, or goes to stderr when the rows go to a file.
    """
    if output is None:
        RENDERERS[fmt](table, sys.stdout)
        if table.stats is not None:
            sys.stdout.write(stats_line(table.stats) + "\n")
        sys.stdout.flush()
        return

    with atomic_open(output) as out:
        RENDERERS[fmt](table, out)
    logger.info(f"Wrote {len(table.rows)} rows to {output}")
    if table.stats is not None:
        sys.stderr.write(stats_line(table.stats) + "\n")
