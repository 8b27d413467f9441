"""
Coulomb walk toolkit
Command-line entry point: spectrum, catalog, evolve and presets.
"""

import json
import sys

from config import Config
from cli import CommandExecutor, build_parser
from utils.logger import Logger


def main(argv=None) -> int:
    """Main entry point. Returns the process exit status."""
    parser = build_parser()
    args = vars(parser.parse_args(argv))

    try:
        Config.validate()
        Logger.set_level(args.pop("log_level") or Config.LOG_LEVEL)
    except ValueError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return 2

    command = args.pop("command")
    result = CommandExecutor().execute(command, args)

    if result["status"] == "success":
        if command == "presets":
            for name, kind in result["presets"].items():
                print(f"{name:24s} {kind}")
        else:
            Logger.info("CLI", result["message"])
            for path in result.get("files", []):
                print(path)
    else:
        print(json.dumps(result, indent=2), file=sys.stderr)
    return result["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
