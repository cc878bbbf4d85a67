"""Command registration for torus-monodromy CLI modules."""

from .classify import classify_cmd
from .markov import markov_group
from .auroux import auroux_group
from .fuzz import fuzz_cmd
from .registry import registry_group, verify_table_cmd


def register_commands(cli):
    """Register all command groups with the root click group."""
    cli.add_command(verify_table_cmd)
    cli.add_command(classify_cmd)
    cli.add_command(markov_group)
    cli.add_command(auroux_group)
    cli.add_command(fuzz_cmd)
    cli.add_command(registry_group)
