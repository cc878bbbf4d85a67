#!/usr/bin/env python3
"""
torus-monodromy: exact classification of genus-1 Lefschetz fibrations over
the disc, from monodromy factorizations in MCG of the one-holed torus.
"""

import logging

import click

from config import get_config, output_format
from utils.logging import setup_logging
from api.routes import register_commands

logger = logging.getLogger(__name__)


@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.option('--format', 'fmt', type=click.Choice(['json', 'text']), default=None,
              help="Output format (default: TORUS_MONODROMY_FORMAT, then output.format in config.json).")
@click.option('--log-level', default=None,
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'], case_sensitive=False),
              help="Logging level for stderr diagnostics.")
@click.pass_context
def cli(ctx, fmt, log_level):
    """Verify, classify and count torus Lefschetz fibrations."""
    config = get_config()
    setup_logging(log_level or config.get('logging', {}).get('level', 'WARNING'))
    ctx.ensure_object(dict)
    ctx.obj['format'] = fmt or output_format()


# Register all command groups
register_commands(cli)


def main():
    """Main application entry point."""
    cli(obj={})


if __name__ == '__main__':
    main()
