"""
Tests for run configuration, the command executor and the entry point.
"""

import json
import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.run_config import RunConfig, parse_sweep
from utils.errors import ConfigError
from cli import CommandExecutor, build_parser
from cli.execution import flags_from_args
from main import main

POINT_INITIAL = {"kind": "point", "coords": "x1x2", "position": [0, 0], "coin": [0.5, 0.5, 0.5, 0.5]}


def test_parse_sweep():
    assert parse_sweep("0:2:5") == [0.0, 2.0, 5]
    for bad in ("0:2", "a:b:c", "0:2:0"):
        with pytest.raises(ConfigError):
            parse_sweep(bad)


def test_parser_flags():
    print("\n" + "=" * 60)
    print("TEST: Command-line flags map onto config keys")
    print("=" * 60)

    parser = build_parser()
    args = vars(parser.parse_args(["spectrum", "--phi", "0:2:5", "--ring-sites", "7", "--k", "0.25"]))
    flags = flags_from_args(args)
    assert flags["phi_sweep"] == [0.0, 2.0, 5]
    assert "phi" not in flags
    assert flags["ring_sites"] == 7
    assert flags["k_grid"] == [0.25]

    args = vars(parser.parse_args(["evolve", "--snapshots", "0,5", "--dump-joint", "5", "--phi0", "0.5"]))
    flags = flags_from_args(args)
    assert flags["snapshot_times"] == [0, 5]
    assert flags["dump_joint_times"] == [5]
    assert flags["phi0"] == 0.5

    with pytest.raises(SystemExit):
        parser.parse_args(["spectrum", "--parity", "sideways"])
    print("[OK] Sweeps, times and single k handled")


def test_resolve_layers():
    config = RunConfig.resolve("catalog", preset="molecules_odd", flags={"ring_sites": 5})
    assert config.preset == "molecules_odd"
    assert config.lc is None and config.ring_sites == 5
    assert config.walk_params().ring_sites == 5

    config = RunConfig.resolve("catalog", preset="molecules_phi_sweep", flags={"phi": 0.5, "lc": 11})
    assert config.phi_sweep is None
    assert config.phi_values() == [0.5]
    assert config.walk_params().ring_sites == 11

    with pytest.raises(ConfigError):
        RunConfig.from_dict({"command": "spectrum", "bogus": 1})
    with pytest.raises(ConfigError):
        RunConfig.resolve("spectrum", preset="no_such_preset")
    with pytest.raises(ConfigError):
        RunConfig.resolve("evolve", flags={"ring_sites": 5})


def test_catalog_run(tmp_path):
    print("\n" + "=" * 60)
    print("TEST: Catalog run writes tables and metadata")
    print("=" * 60)

    result = CommandExecutor().execute(
        "catalog", {"preset": "molecules_odd", "lc": 41, "out": str(tmp_path), "name": "mol"}
    )
    assert result["status"] == "success", result
    assert result["exit_code"] == 0
    names = sorted(Path(f).name for f in result["files"])
    assert names == ["mol_catalog.csv", "mol_components.csv", "mol_metadata.json"]

    metadata = json.loads((tmp_path / "mol_metadata.json").read_text())
    assert metadata["config"]["lc"] == 41
    assert metadata["config"]["preset"] == "molecules_odd"
    assert metadata["summary"]["molecules"] >= 4
    print(f"[OK] {metadata['summary']['molecules']} molecules written")


def test_metadata_reproduces_run(tmp_path):
    first = tmp_path / "first"
    second = tmp_path / "second"
    executor = CommandExecutor()
    result = executor.execute(
        "spectrum", {"ring_sites": 7, "k_points": 4, "phi": "1.0", "out": str(first), "name": "bands"}
    )
    assert result["exit_code"] == 0, result

    again = executor.execute(
        "spectrum", {"config": str(first / "bands_metadata.json"), "out": str(second)}
    )
    assert again["exit_code"] == 0, again
    assert (first / "bands_spectrum.csv").read_bytes() == (second / "bands_spectrum.csv").read_bytes()


def test_evolve_run(tmp_path):
    result = CommandExecutor().execute(
        "evolve",
        {
            "parity": "even",
            "ring_sites": 5,
            "t_max": 6,
            "snapshot_times": [0, 6],
            "dump_joint_times": [6],
            "dump_field_times": [6],
            "initial": json.dumps(POINT_INITIAL),
            "out": str(tmp_path),
            "name": "walk",
        },
    )
    assert result["exit_code"] == 0, result
    names = {Path(f).name for f in result["files"]}
    assert names == {
        "walk_series.csv",
        "walk_marginals.csv",
        "walk_joint_t6.csv",
        "walk_field_t6.csv",
        "walk_metadata.json",
    }
    metadata = json.loads((tmp_path / "walk_metadata.json").read_text())
    assert metadata["summary"]["final_norm"] == pytest.approx(1.0, abs=1e-12)


def test_exit_codes(tmp_path):
    print("\n" + "=" * 60)
    print("TEST: Failures map onto exit codes")
    print("=" * 60)

    executor = CommandExecutor()
    cramped = dict(POINT_INITIAL, extents=[[-2, 2], [-2, 2]])
    result = executor.execute(
        "evolve",
        {"parity": "even", "ring_sites": 5, "t_max": 10, "initial": json.dumps(cramped), "out": str(tmp_path)},
    )
    assert result["status"] == "error"
    assert result["exit_code"] == 3

    result = executor.execute("spectrum", {"parity": "sideways", "out": str(tmp_path)})
    assert result["exit_code"] == 2

    result = executor.execute(
        "evolve",
        {"parity": "even", "ring_sites": 5, "t_max": 2, "phi": "-3.14:3.14:3",
         "initial": json.dumps(POINT_INITIAL), "out": str(tmp_path)},
    )
    assert result["exit_code"] == 2
    assert "sweep" in result["message"]

    blocker = tmp_path / "not_a_dir"
    blocker.write_text("x")
    result = executor.execute(
        "spectrum", {"ring_sites": 5, "k_points": 2, "out": str(blocker / "runs")}
    )
    assert result["exit_code"] == 4
    print("[OK] 3 for growth, 2 for bad config, 4 for I/O")


def test_presets_listing(capsys):
    result = CommandExecutor().execute("presets")
    assert result["presets"]["bands_self_energy"] == "spectrum"
    assert result["presets"]["boson_segment"] == "evolve"
    assert main(["presets"]) == 0
    assert "bands_self_energy" in capsys.readouterr().out


if __name__ == "__main__":
    import tempfile

    test_parse_sweep()
    test_parser_flags()
    test_resolve_layers()
    with tempfile.TemporaryDirectory() as tmp:
        test_catalog_run(Path(tmp))
    with tempfile.TemporaryDirectory() as tmp:
        test_metadata_reproduces_run(Path(tmp))
    with tempfile.TemporaryDirectory() as tmp:
        test_evolve_run(Path(tmp))
    with tempfile.TemporaryDirectory() as tmp:
        test_exit_codes(Path(tmp))
    print("\nALL CLI TESTS PASSED [OK]")
