"""
Simple logger for the walk toolkit.
"""

from datetime import datetime

_LEVELS = {"DEBUG": 10, "INFO": 20, "WARNING": 30, "ERROR": 40}


class Logger:
    """Simple logging utility."""

    threshold = "INFO"

    @classmethod
    def set_level(cls, level: str):
        """Set the minimum level that gets printed."""
        level = level.upper()
        if level not in _LEVELS:
            raise ValueError(f"Unknown log level: {level}")
        cls.threshold = level

    @classmethod
    def enabled(cls, level: str) -> bool:
        return _LEVELS[level] >= _LEVELS[cls.threshold]

    @classmethod
    def log(cls, category: str, message: str, level: str = "INFO"):
        """
        Log a message.

        Args:
            category: Log category (e.g., "Spectral", "Evolution", "CLI")
            message: Log message
            level: Log level ("DEBUG", "INFO", "WARNING", "ERROR")
        """
        if not cls.enabled(level):
            return
        timestamp = datetime.now().strftime("%H:%M:%S")
        print(f"[{timestamp}] [{level}] [{category}] {message}", flush=True)

    @classmethod
    def info(cls, category: str, message: str):
        """Log info message."""
        cls.log(category, message, "INFO")

    @classmethod
    def warning(cls, category: str, message: str):
        """Log warning message."""
        cls.log(category, message, "WARNING")

    @classmethod
    def error(cls, category: str, message: str):
        """Log error message."""
        cls.log(category, message, "ERROR")

    @classmethod
    def debug(cls, category: str, message: str):
        """Log debug message."""
        cls.log(category, message, "DEBUG")
