"""
Command execution.
Turns parsed arguments into a RunConfig and dispatches to the command handlers.
"""

import json
import os
from typing import Any, Dict, Optional

from config.run_config import RunConfig, parse_sweep
from config.settings import get_settings
from utils.errors import ConfigError, WalkError
from utils.logger import Logger
from commands import cmd_catalog, cmd_evolve, cmd_spectrum
from commands.output import failure

# Arguments that select where values come from rather than being values
_SOURCE_ARGS = ("command", "preset", "config", "log_level")


def _sweep_or_value(text: str, name: str) -> Dict[str, Any]:
    if ":" in text:
        return {f"{name}_sweep": parse_sweep(text)}
    try:
        return {name: float(text)}
    except ValueError:
        raise ConfigError(f"--{name} must be a number or start:stop:count, got '{text}'") from None


def _load_initial(text: str) -> Dict[str, Any]:
    if os.path.isfile(text):
        with open(text, "r", encoding="utf-8") as f:
            text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"--initial is neither a JSON object nor a JSON file: {e}") from None
    if not isinstance(data, dict):
        raise ConfigError("--initial must describe a JSON object")
    return data


def flags_from_args(args: Dict[str, Any]) -> Dict[str, Any]:
    """Explicit command-line values as RunConfig keys; unset flags are dropped."""
    flags: Dict[str, Any] = {}
    for key, value in args.items():
        if key in _SOURCE_ARGS or value is None:
            continue
        if key in ("phi", "phi0"):
            flags.update(_sweep_or_value(value, key))
        elif key == "initial":
            flags["initial"] = _load_initial(value)
        else:
            flags[key] = value
    # A single --k on a spectrum run scans just that momentum
    if args.get("command") == "spectrum" and args.get("k") is not None:
        flags["k_grid"] = [float(args["k"])]
    return flags


class CommandExecutor:
    """Execute one command per invocation."""

    def execute(self, command: str, args: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        Execute a command by name.

        Args:
            command: spectrum, catalog, evolve or presets
            args: Parsed arguments (argparse namespace as a dict)

        Returns:
            Status dictionary with an exit_code
        """
        args = dict(args or {})
        args["command"] = command
        try:
            Logger.info("CLI", f"Executing command: {command}")

            if command == "presets":
                return self._list_presets()

            config = RunConfig.resolve(
                command,
                preset=args.get("preset"),
                config_file=args.get("config"),
                flags=flags_from_args(args),
            )
            Logger.debug("CLI", f"Effective config: {config.to_dict()}")

            if command == "spectrum":
                return cmd_spectrum(config)
            elif command == "catalog":
                return cmd_catalog(config)
            elif command == "evolve":
                return cmd_evolve(config)
            else:
                raise ConfigError(f"Unknown command: {command}")

        except (WalkError, OSError) as e:
            return failure(e)

    def _list_presets(self) -> Dict[str, Any]:
        settings = get_settings()
        presets = {}
        for name in settings.preset_names():
            preset = settings.get_preset(name)
            presets[name] = preset.get("command", "")
        return {
            "status": "success",
            "message": f"{len(presets)} presets",
            "presets": presets,
            "exit_code": 0,
        }
