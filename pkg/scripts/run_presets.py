"""
Run every preset in config/settings.json.

Desk scale (the default) shrinks rings, k grids and evolution times so the
whole set finishes in minutes; --full runs the presets exactly as stored in
config/settings.json.

    python scripts/run_presets.py
    python scripts/run_presets.py --full --only bands_self_energy bands_odd
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))

from cli import CommandExecutor
from config.settings import get_settings
from utils.logger import Logger

# Overrides applied per command at desk scale
DESK_OVERRIDES = {
    "spectrum": {"k_points": 17},
    "catalog": {},
    "evolve": {"t_max": 150},
}
DESK_LC = {"odd": 41, "even": 40}


def desk_args(preset: dict) -> dict:
    command = preset.get("command", "spectrum")
    args = dict(DESK_OVERRIDES.get(command, {}))
    if command in ("spectrum", "catalog"):
        args["lc"] = DESK_LC[preset.get("parity", "odd")]
    if command == "evolve":
        times = [t for t in preset.get("snapshot_times", []) if t <= args["t_max"]]
        args["snapshot_times"] = times or [0, args["t_max"]]
        joint = [t for t in preset.get("dump_joint_times", []) if t <= args["t_max"]]
        args["dump_joint_times"] = joint or [args["t_max"]]
    return args


def main() -> int:
    parser = argparse.ArgumentParser(description="Run the stored presets")
    parser.add_argument("--full", action="store_true", help="Run at the stored scale")
    parser.add_argument("--only", nargs="*", default=None, help="Preset names to run")
    parser.add_argument("--out", default=None, help="Output directory")
    options = parser.parse_args()

    settings = get_settings()
    names = options.only or settings.preset_names()
    executor = CommandExecutor()
    worst = 0
    for name in names:
        preset = settings.get_preset(name)
        args = {"preset": name, "name": name}
        if options.out:
            args["out"] = options.out
        if not options.full:
            args.update(desk_args(preset))
        Logger.info("Presets", f"Running {name} ({'full' if options.full else 'desk'} scale)")
        result = executor.execute(preset.get("command", "spectrum"), args)
        if result["status"] != "success":
            Logger.error("Presets", f"{name}: {result['message']}")
        worst = max(worst, result["exit_code"])
    return worst


if __name__ == "__main__":
    sys.exit(main())
