"""Command-line modules for torus-monodromy."""

from .routes import register_commands

__all__ = ['register_commands']
