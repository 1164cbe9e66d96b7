import argparse
import importlib
import logging
import sys
from typing import Dict, List, Optional

from config.config import LOG_DATEFMT, LOG_FORMAT, LOG_LEVEL
from hbn.errors import ArithmeticOpError, HBNError, ParseError, ResourceError

# Configure logging
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT, datefmt=LOG_DATEFMT)
logger = logging.getLogger('hbn.cli')

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_ARITHMETIC = 2
EXIT_RESOURCE = 3


def exit_code_for(error: Exception) -> int:
    if isinstance(error, ResourceError):
        return EXIT_RESOURCE
    if isinstance(error, ArithmeticOpError):
        return EXIT_ARITHMETIC
    # ParseError and bad argument values
    return EXIT_PARSE


class HBNApp:
    """Command-line front-end; commands are loaded from extension modules exposing setup(app)"""

    def __init__(self):
        self.parser = argparse.ArgumentParser(
            prog="hbn", description="Calculator and benchmarks for hereditarily binary numbers")
        self.parser.add_argument("--log-level", default=None,
                                 choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                                 type=str.upper, help=f"logging level (default: {LOG_LEVEL})")
        self._subparsers = self.parser.add_subparsers(dest="command", required=True)
        self.commands: Dict[str, object] = {}
        self.initial_extensions = ['commands.calc', 'commands.bench', 'commands.check']

    def setup(self):
        for ext in self.initial_extensions:
            importlib.import_module(ext).setup(self)
        logger.debug(f"[init] Loaded {len(self.initial_extensions)} extensions")

    def add_command(self, command):
        command.configure(self._subparsers.add_parser(command.name, help=command.help))
        self.commands[command.name] = command

    def run(self, argv: Optional[List[str]] = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            # --help exits 0, usage errors exit 2 as argparse does everywhere
            return e.code if isinstance(e.code, int) else EXIT_PARSE

        root = logging.getLogger()
        previous_level = root.level
        if args.log_level:
            root.setLevel(args.log_level)

        try:
            return self.commands[args.command](args)
        except (HBNError, ValueError) as e:
            code = exit_code_for(e)
            kind = "parse" if isinstance(e, ParseError) else type(e).__name__
            logger.error(f"[boundary:error] Command '{args.command}' failed ({kind}): {e}")
            print(f"error: {e}", file=sys.stderr)
            return code
        finally:
            root.setLevel(previous_level)


def run(argv: Optional[List[str]] = None) -> int:
    app = HBNApp()
    app.setup()
    return app.run(argv)


if __name__ == "__main__":
    sys.exit(run())
