"""
Output files of a run: CSV tables at full double precision plus a JSON
metadata file holding the effective config, code version and timings.
"""

import json
import os
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from config import Config
from config.run_config import RunConfig
from utils.errors import ConfigError, exit_code_for
from utils.logger import Logger
from utils.path_validator import validate_output_dir, validate_run_name
from walk.field import AmplitudeField
from walk.types import COMPONENTS
from observables.probability import AXIS_NAMES, Marginal

FLOAT_FORMAT = "%.17g"


class RunWriter:
    """Writes the files of one run as <out>/<name>_<suffix>."""

    def __init__(self, out_dir: str, name: str):
        ok, message = validate_run_name(name)
        if not ok:
            raise ConfigError(message)
        ok, message = validate_output_dir(out_dir)
        if not ok:
            raise ConfigError(message)
        os.makedirs(out_dir, exist_ok=True)
        self.out_dir = out_dir
        self.name = name
        self.files: List[str] = []

    def path(self, suffix: str) -> str:
        return os.path.join(self.out_dir, f"{self.name}_{suffix}")

    def write_table(self, frame: pd.DataFrame, suffix: str) -> str:
        path = self.path(suffix)
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        self.files.append(path)
        Logger.debug("Output", f"Wrote {len(frame)} rows to {path}")
        return path

    def write_metadata(self, config: RunConfig, timings: Dict[str, float],
                       summary: Optional[Dict[str, Any]] = None) -> str:
        path = self.path("metadata.json")
        metadata = {
            "config": config.to_dict(),
            "version": Config.VERSION,
            "created": datetime.now(timezone.utc).isoformat(),
            "timings": timings,
            "files": [os.path.basename(f) for f in self.files],
            "summary": summary or {},
        }
        with open(path, "w", encoding="utf-8") as f:
            json.dump(metadata, f, indent=2, sort_keys=True)
        self.files.append(path)
        return path


def marginal_frame(snapshots: Dict[int, Tuple[Marginal, Marginal]]) -> pd.DataFrame:
    """Long table t, axis, coordinate, p over every nonzero marginal entry."""
    frames = []
    for t in sorted(snapshots):
        for marginal in snapshots[t]:
            keep = marginal.values > 0
            frames.append(
                pd.DataFrame(
                    {
                        "t": t,
                        "axis": marginal.name,
                        "coordinate": marginal.coordinates[keep],
                        "p": marginal.values[keep],
                    }
                )
            )
    if not frames:
        return pd.DataFrame(columns=["t", "axis", "coordinate", "p"])
    return pd.concat(frames, ignore_index=True)


def field_frame(field: AmplitudeField) -> pd.DataFrame:
    """Nonzero sites of a field, with re/im columns per coin component."""
    a_name, b_name = AXIS_NAMES[field.coords]
    occupied = np.any(field.data != 0, axis=2)
    ia, ib = np.nonzero(occupied)
    frame = pd.DataFrame({a_name: field.origin[0] + ia, b_name: field.origin[1] + ib})
    amplitudes = field.data[ia, ib]
    for c, component in enumerate(COMPONENTS):
        frame[f"{component}_re"] = amplitudes[:, c].real
        frame[f"{component}_im"] = amplitudes[:, c].imag
    return frame


def failure(error: BaseException, files: Optional[List[str]] = None) -> Dict[str, Any]:
    code = exit_code_for(error)
    Logger.error("CLI", f"{type(error).__name__}: {error}")
    result = {"status": "error", "message": str(error), "exit_code": code}
    if files:
        result["files"] = files
    return result
