"""
Output path validation.
Keeps run outputs inside a plain directory tree and rejects names that would
escape it or clobber unrelated files.
"""

import re
from pathlib import Path
from typing import Optional

_NAME_PATTERN = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_.-]*$")


def validate_run_name(name: str) -> tuple[bool, Optional[str]]:
    """
    Validate a run name used as the stem of every output file.

    Args:
        name: Run name

    Returns:
        tuple: (is_valid, error_message)
    """
    if not name or not isinstance(name, str):
        return False, "Run name must be a non-empty string"
    if not _NAME_PATTERN.match(name):
        return False, f"Invalid run name '{name}': use letters, digits, '_', '-', '.'"
    if ".." in name:
        return False, f"Invalid run name '{name}': '..' is not allowed"
    return True, None


def validate_output_dir(directory: str) -> tuple[bool, Optional[str]]:
    """
    Validate that an output directory is usable.

    Args:
        directory: Directory path (created later if missing)

    Returns:
        tuple: (is_valid, error_message)
    """
    try:
        path = Path(directory)
        for component in path.parts:
            if any(danger in component for danger in ("~", "$")):
                return False, f"Dangerous path component detected: {component}"
        if path.exists() and not path.is_dir():
            return False, f"'{directory}' exists and is not a directory"
        return True, None
    except (ValueError, OSError) as e:
        return False, f"Invalid path: {str(e)}"
