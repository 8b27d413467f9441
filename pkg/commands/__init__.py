"""Command handlers. Each takes a RunConfig and returns a status dictionary."""

from commands.spectrum import cmd_spectrum
from commands.catalog import cmd_catalog
from commands.evolve import cmd_evolve

__all__ = ["cmd_spectrum", "cmd_catalog", "cmd_evolve"]
