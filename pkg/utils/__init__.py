"""Utility modules for torus-monodromy."""

from .logging import setup_logging

__all__ = ['setup_logging']
