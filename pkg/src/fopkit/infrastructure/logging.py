import logging
import sys

from fopkit.infrastructure.run_context import get_command, get_run_id

_FIELDS = (
    ("1;36", "%(filename)s:%(lineno)d"),
    (None, "#%(levelname)-8s"),
    ("1;32", "[%(asctime)s]"),
    ("1;35", "[run:%(run_id)s]"),
    ("1;33", "[cmd:%(command)s]"),
    (None, "-"),
    ("1;34", "%(name)s"),
    (None, "- %(message)s"),
)


class RunContextFilter(logging.Filter):
    """Inject run_id and command into all log records."""

    def filter(self, record: logging.LogRecord) -> bool:
        record.run_id = get_run_id() or "-"  # pyright: ignore[reportAttributeAccessIssue]
        record.command = get_command() or "-"  # pyright: ignore[reportAttributeAccessIssue]
        return True


def log_format(color: bool) -> str:
    if not color:
        return " ".join(text for _, text in _FIELDS)
    return " ".join(f"\033[{code}m{text}\033[0m" if code else text for code, text in _FIELDS)


def setup_logging(level: int | str = logging.INFO) -> None:
    # stdout carries the record stream
    stream = sys.stderr
    handler = logging.StreamHandler(stream)
    handler.addFilter(RunContextFilter())

    logging.basicConfig(
        level=level,
        format=log_format(color=stream.isatty()),
        force=True,
        handlers=[handler],
    )


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
