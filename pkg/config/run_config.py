"""
Run configuration shared by the spectrum, catalog and evolve commands.

Values are merged in order: built-in defaults and config/settings.json
defaults, then a named preset, then a JSON config file, then explicit
command-line flags. The merged dictionary is what gets written to output
metadata, and RunConfig.from_dict() on it reproduces the run.
"""

import json
import math
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Optional

import numpy as np

from config.config import Config
from config.settings import get_settings
from utils.errors import ConfigError, DomainError
from utils.logger import Logger

COMMANDS = ("spectrum", "catalog", "evolve")


def parse_sweep(text: str) -> List[float]:
    """'start:stop:count' -> [start, stop, count]."""
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ConfigError(f"Sweep '{text}' must look like start:stop:count")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"Sweep '{text}' must look like start:stop:count") from None
    if count < 1:
        raise ConfigError(f"Sweep '{text}' needs a positive count")
    return [start, stop, count]


def sweep_values(sweep: List[float]) -> List[float]:
    start, stop, count = sweep
    return [float(v) for v in np.linspace(start, stop, int(count))]


@dataclass
class RunConfig:
    command: str = "spectrum"
    phi: float = 1.0
    phi0: float = 0.0
    phi_sweep: Optional[List[float]] = None
    phi0_sweep: Optional[List[float]] = None
    parity: str = "odd"
    lc: Optional[int] = None
    ring_sites: Optional[int] = None
    k: float = 0.0
    k_points: int = Config.DEFAULT_K_POINTS
    k_grid: Optional[List[float]] = None
    t_max: int = 100
    stride: int = 1
    boundary: str = "hard"
    snapshot_times: List[int] = field(default_factory=list)
    dump_joint_times: List[int] = field(default_factory=list)
    dump_field_times: List[int] = field(default_factory=list)
    initial: Optional[Dict[str, Any]] = None
    out: str = Config.OUTPUT_DIR
    name: Optional[str] = None
    preset: Optional[str] = None

    # Construction ---------------------------------------------------------

    @classmethod
    def field_names(cls) -> List[str]:
        return [f.name for f in fields(cls)]

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunConfig":
        unknown = sorted(set(data) - set(cls.field_names()))
        if unknown:
            raise ConfigError(f"Unknown config keys: {', '.join(unknown)}")
        config = cls(**data)
        config.validate()
        return config

    @classmethod
    def load_file(cls, path: str) -> Dict[str, Any]:
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Config file '{path}' is not valid JSON: {e}") from None
        if not isinstance(data, dict):
            raise ConfigError(f"Config file '{path}' must hold a JSON object")
        # Output metadata nests the run config under "config"
        if isinstance(data.get("config"), dict):
            return data["config"]
        return data

    @classmethod
    def resolve(
        cls,
        command: str,
        preset: Optional[str] = None,
        config_file: Optional[str] = None,
        flags: Optional[Dict[str, Any]] = None,
    ) -> "RunConfig":
        """Merge defaults < preset < config file < flags into a validated config."""
        settings = get_settings()
        merged: Dict[str, Any] = {
            key: value for key, value in settings.settings.items() if key in cls.field_names()
        }
        if preset:
            try:
                merged.update(settings.get_preset(preset))
            except KeyError as e:
                raise ConfigError(str(e).strip("'\"")) from None
            merged["preset"] = preset
        if config_file:
            merged.update(cls.load_file(config_file))
        for key, value in (flags or {}).items():
            if value is not None:
                merged[key] = value
        if preset and merged.get("command", command) != command:
            Logger.warning("Config", f"Preset '{preset}' was written for {merged['command']}; running {command}")
        merged["command"] = command
        # A scalar flag replaces a sweep inherited from a preset or file
        for key in ("phi", "phi0"):
            if (flags or {}).get(key) is not None:
                merged[f"{key}_sweep"] = None
        for key, other in (("lc", "ring_sites"), ("ring_sites", "lc")):
            if (flags or {}).get(key) is not None:
                merged[other] = None
        return cls.from_dict(merged)

    # Validation -----------------------------------------------------------

    def validate(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"Unknown command '{self.command}'")
        if self.parity not in ("odd", "even"):
            raise ConfigError(f"parity must be 'odd' or 'even', got '{self.parity}'")
        for name in ("phi", "phi0", "k"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ConfigError(f"{name} must be a finite number, got {value!r}")
        for name in ("phi_sweep", "phi0_sweep"):
            sweep = getattr(self, name)
            if sweep is not None and (len(sweep) != 3 or int(sweep[2]) < 1):
                raise ConfigError(f"{name} must be [start, stop, count]")
        if self.lc is not None and self.ring_sites is not None:
            raise ConfigError("Give either lc or ring_sites, not both")
        if self.k_points < 1:
            raise ConfigError(f"k_points must be >= 1, got {self.k_points}")
        if self.t_max < 0:
            raise ConfigError(f"t_max must be >= 0, got {self.t_max}")
        if self.stride < 1:
            raise ConfigError(f"stride must be >= 1, got {self.stride}")
        if self.boundary not in ("hard", "periodic"):
            raise ConfigError(f"boundary must be 'hard' or 'periodic', got '{self.boundary}'")
        if self.command == "evolve" and not self.initial:
            raise ConfigError("evolve needs an initial state (preset, config file or --initial)")
        if self.command == "evolve" and (self.phi_sweep or self.phi0_sweep):
            raise ConfigError("evolve runs a single (phi, phi0); give numbers, not start:stop:count sweeps")
        try:
            self.walk_params()
        except DomainError as e:
            raise ConfigError(str(e)) from None

    # Derived values -------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def phi_values(self) -> List[float]:
        return sweep_values(self.phi_sweep) if self.phi_sweep else [float(self.phi)]

    def phi0_values(self) -> List[float]:
        return sweep_values(self.phi0_sweep) if self.phi0_sweep else [float(self.phi0)]

    def walk_params(self, phi: Optional[float] = None, phi0: Optional[float] = None):
        from walk.types import WalkParams

        phi = self.phi if phi is None else phi
        phi0 = self.phi0 if phi0 is None else phi0
        if self.ring_sites is not None:
            return WalkParams(phi=phi, phi0=phi0, parity=self.parity, ring_sites=self.ring_sites)
        lc = self.lc
        if lc is None:
            lc = Config.DEFAULT_LC_ODD if self.parity == "odd" else Config.DEFAULT_LC_EVEN
        return WalkParams.from_lc(phi, lc, self.parity, phi0)

    def param_grid(self):
        """WalkParams for every (phi, phi0) pair of the sweeps."""
        return [self.walk_params(phi, phi0) for phi in self.phi_values() for phi0 in self.phi0_values()]

    def k_values(self) -> List[float]:
        if self.command == "catalog":
            return [float(self.k)]
        if self.k_grid:
            return [float(k) for k in self.k_grid]
        from spectral.bands import k_grid

        return [float(k) for k in k_grid(self.k_points)]

    def run_name(self) -> str:
        return self.name or self.preset or self.command

    def initial_spec(self):
        """InitialStateSpec described by the `initial` dictionary."""
        from config.initial import initial_from_dict

        if not self.initial:
            raise ConfigError("No initial state configured")
        return initial_from_dict(self.initial, self.walk_params())
