"""Shared output and error helpers for the CLI."""

from typing import Any, Iterable, Optional

import click

from utils.codec import dumps, loads


class MalformedInput(click.ClickException):
    """Unreadable or invalid input; exit status 2."""
    exit_code = 2


class VerificationFailed(click.ClickException):
    """A check or classification failed; exit status 1."""
    exit_code = 1


def emit(data: Any, lines: Optional[Iterable[str]] = None):
    """Write ``data`` as JSON, or ``lines`` when the text format is selected."""
    ctx = click.get_current_context()
    if ctx.find_root().obj.get('format') == 'text' and lines is not None:
        for line in lines:
            click.echo(line)
    else:
        click.echo(dumps(data))


def read_json(stream) -> Any:
    return loads(stream.read())


def read_source(source: str) -> Any:
    """JSON from inline text, a path, or ``-`` for stdin."""
    if source.lstrip().startswith(('{', '[')):
        return loads(source)
    try:
        with click.open_file(source, 'r') as stream:
            return read_json(stream)
    except OSError as e:
        raise MalformedInput(f"cannot read {source}: {e.strerror or e}")
