"""Catalog command: bound-state tables and rho profiles."""

import time
from typing import Any, Dict

import pandas as pd

from config.run_config import RunConfig
from utils.errors import WalkError
from utils.logger import Logger
from boundstates.catalog import catalog, catalog_frame, component_frame
from commands.output import RunWriter, failure


def cmd_catalog(config: RunConfig) -> Dict[str, Any]:
    """
    Write <name>_catalog.csv (summary columns then P_<rho> per ring site),
    <name>_components.csv (|R|^2, |D|^2, |U|^2, |L|^2 per occupied rho) and
    <name>_metadata.json.
    """
    writer = None
    try:
        writer = RunWriter(config.out, config.run_name())
        started = time.perf_counter()
        k = config.k_values()[0]
        summaries, components = [], []
        for params in config.param_grid():
            records = catalog(params, k)
            frame = catalog_frame(records)
            frame.insert(0, "phi0", params.phi0)
            frame.insert(0, "phi", params.phi)
            summaries.append(frame)
            parts = component_frame(records)
            parts.insert(0, "phi0", params.phi0)
            parts.insert(0, "phi", params.phi)
            components.append(parts)

        table = pd.concat(summaries, ignore_index=True)
        writer.write_table(table, "catalog.csv")
        writer.write_table(pd.concat(components, ignore_index=True), "components.csv")
        elapsed = time.perf_counter() - started
        writer.write_metadata(config, {"total_seconds": elapsed}, summary={"molecules": len(table)})
        Logger.info("CLI", f"Catalog: {len(table)} bound states in {elapsed:.1f}s")
        return {
            "status": "success",
            "message": f"Wrote {len(table)} molecules",
            "files": writer.files,
            "exit_code": 0,
        }
    except (WalkError, OSError) as e:
        return failure(e, writer.files if writer else None)
