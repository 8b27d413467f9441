"""
Configuration package for the Coulomb walk toolkit.
"""

from config.config import Config

__all__ = ['Config']
