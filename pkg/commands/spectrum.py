"""Spectrum command: band tables over a k grid, optionally over phi/phi0 sweeps."""

import time
from typing import Any, Dict

import pandas as pd

from config.run_config import RunConfig
from utils.errors import PartialResultsError, WalkError
from utils.logger import Logger
from spectral.bands import band_scan
from commands.output import RunWriter, failure


def cmd_spectrum(config: RunConfig) -> Dict[str, Any]:
    """
    Write <name>_spectrum.csv (one row per phi, phi0, k, state) and
    <name>_metadata.json.

    Returns
    -------
    dict
        status, message, files and exit_code
    """
    writer = None
    try:
        writer = RunWriter(config.out, config.run_name())
        started = time.perf_counter()
        k_values = config.k_values()
        frames = []
        for params in config.param_grid():
            try:
                table = band_scan(params, k_values)
            except PartialResultsError as e:
                partial = e.partial.copy() if e.partial is not None else pd.DataFrame()
                partial.insert(0, "phi0", params.phi0)
                partial.insert(0, "phi", params.phi)
                frames.append(partial)
                writer.write_table(pd.concat(frames, ignore_index=True), "spectrum.partial.csv")
                raise
            table.insert(0, "phi0", params.phi0)
            table.insert(0, "phi", params.phi)
            frames.append(table)

        table = pd.concat(frames, ignore_index=True)
        writer.write_table(table, "spectrum.csv")
        elapsed = time.perf_counter() - started
        writer.write_metadata(
            config,
            {"total_seconds": elapsed},
            summary={
                "rows": len(table),
                "k_points": len(k_values),
                "bound_rows": int(table["bound_flag"].sum()),
            },
        )
        Logger.info("CLI", f"Spectrum: {len(table)} rows in {elapsed:.1f}s")
        return {
            "status": "success",
            "message": f"Wrote {len(table)} spectrum rows",
            "files": writer.files,
            "exit_code": 0,
        }
    except (WalkError, OSError) as e:
        return failure(e, writer.files if writer else None)
