"""
Settings Manager
Loads default run values and named presets from config/settings.json.
"""

import copy
import json
import os
from typing import Any, Dict, List

from utils.logger import Logger

_DEFAULT_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "settings.json")


class Settings:
    """Manages run defaults and presets."""

    DEFAULT_SETTINGS = {
        "phi": 1.0,
        "phi0": 0.0,
        "parity": "odd",  # odd, even
        "k": 0.0,  # pseudo-momentum for catalog runs
        "t_max": 100,
        "stride": 1,  # observer stride for evolve runs
    }

    def __init__(self, config_path: str = _DEFAULT_PATH):
        """Initialize settings manager."""
        self.config_path = config_path
        self.settings, self.presets = self.load_settings()

    def load_settings(self) -> tuple:
        """Load defaults and presets from file, falling back to built-ins."""
        settings = self.DEFAULT_SETTINGS.copy()
        presets: Dict[str, Dict[str, Any]] = {}
        if os.path.exists(self.config_path):
            try:
                with open(self.config_path, 'r', encoding='utf-8') as f:
                    loaded = json.load(f)
                # Merge with defaults (in case new settings were added)
                settings.update(loaded.get("defaults", {}))
                presets = loaded.get("presets", {})
            except (OSError, json.JSONDecodeError) as e:
                Logger.error("Settings", f"Error loading settings: {e}")
        return settings, presets

    def get(self, key: str, default=None):
        """Get a default value."""
        return self.settings.get(key, default)

    def preset_names(self) -> List[str]:
        """Names of the available presets, sorted."""
        return sorted(self.presets)

    def get_preset(self, name: str) -> Dict[str, Any]:
        """Return a deep copy of a preset, or raise KeyError."""
        if name not in self.presets:
            raise KeyError(f"Unknown preset '{name}'. Available: {', '.join(self.preset_names())}")
        return copy.deepcopy(self.presets[name])


# Global settings instance
_settings_instance = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings_instance
    if _settings_instance is None:
        _settings_instance = Settings()
    return _settings_instance
