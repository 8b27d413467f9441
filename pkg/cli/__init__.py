"""Command-line surface: argument schemas and the command executor."""

from cli.schemas import COMMAND_SCHEMAS, build_parser
from cli.execution import CommandExecutor

__all__ = ["COMMAND_SCHEMAS", "build_parser", "CommandExecutor"]
