"""
Command schemas for the command line.
Centralized flag definitions in the same dictionary format for every command;
build_parser() turns them into an argparse parser.
"""

import argparse
from typing import Any, Dict, List

# Flags shared by all three run commands
_WALK_FLAGS: Dict[str, Dict[str, Any]] = {
    "phi": {"type": "SWEEP", "description": "Interaction strength, a value or start:stop:count"},
    "phi0": {"type": "SWEEP", "description": "Phase at rho = 0, a value or start:stop:count"},
    "parity": {"type": "STRING", "choices": ["odd", "even"], "description": "Parity of rho (odd: fermion-like sector, even: contains rho = 0)"},
    "lc": {"type": "INTEGER", "description": "Circumference l_c of the rho circle; N = l_c (odd) or l_c / 2 (even)"},
    "ring_sites": {"type": "INTEGER", "description": "Number of ring sites N, instead of --lc"},
}

_RUN_FLAGS: Dict[str, Dict[str, Any]] = {
    "preset": {"type": "STRING", "description": "Named preset from config/settings.json"},
    "config": {"type": "STRING", "description": "JSON config file (a metadata file from an earlier run works too)"},
    "out": {"type": "STRING", "description": "Output directory"},
    "name": {"type": "STRING", "description": "Stem of every output file"},
}

COMMAND_SCHEMAS: List[Dict[str, Any]] = [
    {
        "name": "spectrum",
        "description": "Quasi-energy bands omega(k) with localization and exchange labels for every eigenstate.",
        "parameters": {
            **_WALK_FLAGS,
            "k": {"type": "NUMBER", "description": "Scan a single pseudo-momentum instead of a grid"},
            "k_points": {"type": "INTEGER", "description": "Uniform grid size over [-pi/2, pi/2)"},
            **_RUN_FLAGS,
        },
    },
    {
        "name": "catalog",
        "description": "Bound states (molecules) at one pseudo-momentum with their rho profiles.",
        "parameters": {
            **_WALK_FLAGS,
            "k": {"type": "NUMBER", "description": "Pseudo-momentum in [-pi/2, pi/2)"},
            **_RUN_FLAGS,
        },
    },
    {
        "name": "evolve",
        "description": "Time evolution of a two-walker state with observable series and snapshots.",
        "parameters": {
            **_WALK_FLAGS,
            "t_max": {"type": "INTEGER", "description": "Number of steps"},
            "stride": {"type": "INTEGER", "description": "Record observables every N steps"},
            "boundary": {"type": "STRING", "choices": ["hard", "periodic"], "description": "Lattice boundary"},
            "snapshot_times": {"type": "TIMES", "flag": "snapshots", "description": "Comma separated times for marginal snapshots"},
            "dump_joint_times": {"type": "TIMES", "flag": "dump-joint", "description": "Comma separated times for joint-probability grids"},
            "dump_field_times": {"type": "TIMES", "flag": "dump-field", "description": "Comma separated times for amplitude dumps"},
            "initial": {"type": "JSON", "description": "Initial state as a JSON object or a path to a JSON file"},
            **_RUN_FLAGS,
        },
    },
    {
        "name": "presets",
        "description": "List the presets in config/settings.json.",
        "parameters": {},
    },
]


def parse_times(text: str) -> List[int]:
    """'0,50,100' -> [0, 50, 100]."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of integers") from None


_ARG_TYPES = {
    "NUMBER": float,
    "INTEGER": int,
    "STRING": str,
    "SWEEP": str,  # Resolved by the executor: a float or a start:stop:count sweep
    "JSON": str,
    "TIMES": parse_times,
}


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser from COMMAND_SCHEMAS."""
    parser = argparse.ArgumentParser(
        prog="qwalk",
        description="Two-walker quantum walk with a Coulomb phase: spectra, molecules and evolutions.",
    )
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=None,
                        help="Override QWALK_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for schema in COMMAND_SCHEMAS:
        sub = subparsers.add_parser(schema["name"], help=schema["description"],
                                    description=schema["description"])
        for dest, spec in schema["parameters"].items():
            flag = "--" + spec.get("flag", dest.replace("_", "-"))
            kwargs: Dict[str, Any] = {
                "dest": dest,
                "type": _ARG_TYPES[spec["type"]],
                "default": None,
                "help": spec["description"],
            }
            if "choices" in spec:
                kwargs["choices"] = spec["choices"]
            sub.add_argument(flag, **kwargs)
    return parser
