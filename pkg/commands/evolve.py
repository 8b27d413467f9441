"""Evolve command: observable series and snapshots of a time evolution."""

import time
from typing import Any, Dict

from config.run_config import RunConfig
from utils.errors import WalkError
from utils.logger import Logger
from evolution.runner import evolve
from commands.output import RunWriter, failure, field_frame, marginal_frame


def cmd_evolve(config: RunConfig) -> Dict[str, Any]:
    """
    Write <name>_series.csv, and when requested <name>_marginals.csv,
    <name>_joint_t<t>.csv and <name>_field_t<t>.csv, plus metadata.
    """
    writer = None
    try:
        writer = RunWriter(config.out, config.run_name())
        params = config.walk_params()
        init = config.initial_spec()
        started = time.perf_counter()
        series = evolve(
            init,
            params,
            config.t_max,
            stride=config.stride,
            snapshot_times=config.snapshot_times,
            joint_times=config.dump_joint_times,
            field_times=config.dump_field_times,
            boundary=config.boundary,
        )
        evolved = time.perf_counter()

        writer.write_table(series.to_frame(), "series.csv")
        if series.marginal_snapshots:
            writer.write_table(marginal_frame(series.marginal_snapshots), "marginals.csv")
        for t in sorted(series.joint_snapshots):
            writer.write_table(series.joint_snapshots[t].to_frame(), f"joint_t{t}.csv")
        for t in sorted(series.field_snapshots):
            writer.write_table(field_frame(series.field_snapshots[t]), f"field_t{t}.csv")

        last = series.last
        writer.write_metadata(
            config,
            {"evolve_seconds": evolved - started, "write_seconds": time.perf_counter() - evolved},
            summary={
                "records": len(series),
                "rho0": series.rho0,
                "final_mean_rho": last.mean_rho,
                "final_norm": last.norm,
                "overlap_time": series.overlap_time(),
            },
        )
        Logger.info("CLI", f"Evolve: {len(series)} records, final <rho>={last.mean_rho:.6f}")
        return {
            "status": "success",
            "message": f"Evolved {config.t_max} steps",
            "files": writer.files,
            "exit_code": 0,
        }
    except (WalkError, OSError) as e:
        return failure(e, writer.files if writer else None)
