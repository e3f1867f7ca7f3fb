#!/usr/bin/env python3
"""
Subcommand runner for the fopkit command line.

Usage:
    fopkit <subcommand> [args...]
    python -m fopkit.scripts <subcommand> [args...]

Example:
    fopkit radicals --poly t2m1 --bound 1000000
    fopkit norms --s -1 --nu 1009 --bound 1000000 --output norms.csv

Exit codes: 0 on success, 1 when the computation fails, 2 on invalid options.
"""

import argparse
import importlib
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from fopkit.exceptions import ConfigError
from fopkit.infrastructure.config import settings
from fopkit.infrastructure.logging import get_logger, setup_logging
from fopkit.infrastructure.run_context import RunContext, clear_run_context, generate_run_id, set_run_context
from fopkit.scripts.base import BaseScript
from fopkit.scripts.writers import write_table

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2

# modules of the scripts package that are not subcommands
_PLUMBING = frozenset({"__init__", "__main__", "base", "runner", "writers"})


class ScriptRunner:
    """Loads a subcommand by name, validates its flags, runs it and writes its rows"""

    def __init__(self, scripts_module_prefix: str = "fopkit.scripts"):
        self.scripts_module_prefix = scripts_module_prefix

    def available_scripts(self) -> list[str]:
        scripts_module = importlib.import_module(self.scripts_module_prefix)
        scripts_dir = Path(scripts_module.__file__).parent
        return sorted(f.stem.replace("_", "-") for f in scripts_dir.glob("*.py") if f.stem not in _PLUMBING)

    def load_script(self, script_name: str) -> type[BaseScript]:
        """Load the BaseScript subclass defined in the subcommand's module"""
        available = self.available_scripts()
        if script_name not in available:
            logger.error(f"Failed to load script '{script_name}'")
            logger.info(f"Available scripts: {', '.join(available)}")
            raise ConfigError(f"Script '{script_name}' not found", script_name)

        module = importlib.import_module(f"{self.scripts_module_prefix}.{script_name.replace('-', '_')}")
        for attr_name in dir(module):
            attr = getattr(module, attr_name)
            # Only consider classes defined in this module (not imported)
            if isinstance(attr, type) and issubclass(attr, BaseScript) and attr.__module__ == module.__name__:
                return attr
        raise ConfigError(f"Module for '{script_name}' defines no script", script_name)

    def run_script(self, script_name: str, args: Sequence[str]) -> int:
        """Execute one subcommand and return its exit code"""
        set_run_context(RunContext(run_id=generate_run_id(), command=script_name))
        try:
            script_class = self.load_script(script_name)
            config = script_class.parse_config(script_name, args)
            script = script_class(config)

            logger.info(f"Executing script: {script_name}")
            table = script.execute()
            write_table(table, config.format, config.output)
            return EXIT_OK

        except (ConfigError, ValidationError) as e:
            logger.error(f"Invalid options for {script_name}: {e}")
            return EXIT_CONFIG

        except Exception as e:
            logger.error(f"Script execution failed: {e}", exc_info=True)
            return EXIT_FAILURE

        finally:
            clear_run_context()

    def main(self, argv: Sequence[str] | None = None) -> int:
        """Main entry point for the script runner"""
        parser = argparse.ArgumentParser(prog="fopkit", description="First-occurrence sweeps over radical families")
        parser.add_argument("--log-level", help="Logging level (default LOGGING__LEVEL)")
        parser.add_argument("script", help="Subcommand to run, e.g. radicals, norms, verify-powers")
        parser.add_argument("args", nargs=argparse.REMAINDER, help="Arguments of the subcommand")

        args = parser.parse_args(argv)
        setup_logging((args.log_level or settings.logging.level).upper())
        return self.run_script(args.script, args.args)


def main() -> None:
    sys.exit(ScriptRunner().main())


if __name__ == "__main__":
    main()
