"""Run context for context-local storage of the current sweep identity."""

from contextvars import ContextVar
from dataclasses import dataclass
from uuid import uuid4


@dataclass(frozen=True)
class RunContext:
    """Identity of the command currently producing records."""

    run_id: str
    command: str | None = None


_run_context: ContextVar[RunContext | None] = ContextVar("run_context", default=None)


def get_run_context() -> RunContext | None:
    """Get current run context (returns None outside a run)."""
    return _run_context.get()


def get_run_id() -> str | None:
    ctx = _run_context.get()
    return ctx.run_id if ctx else None


def get_command() -> str | None:
    ctx = _run_context.get()
    return ctx.command if ctx else None


def set_run_context(ctx: RunContext) -> None:
    _run_context.set(ctx)


def clear_run_context() -> None:
    _run_context.set(None)


def generate_run_id() -> str:
    """Short run id; enough to tell interleaved runs apart in a log file."""
    return uuid4().hex[:8]
