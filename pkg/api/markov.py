"""Markov-type equation commands: solve, reduce and orbit."""

import click

from config import get_config
from services.errors import MarkovError
from services.markov import (
    MarkovTriple, MarkovType, enumerate_solutions, normalize_minimum, orbit, reduce_to_minimum,
)
from .output import MalformedInput, emit

powers_option = click.option('--powers', nargs=3, type=int, required=True, metavar='L M N',
                             help="Powers (l, m, n) of the equation l x^2 + m y^2 + n z^2 = c xyz.")


def _markov_type(powers) -> MarkovType:
    try:
        return MarkovType.of(powers)
    except MarkovError as e:
        raise MalformedInput(str(e))


@click.group('markov')
def markov_group():
    """Markov-type equations of the 14 extremal types."""


@markov_group.command('solve')
@powers_option
@click.option('--bound', type=int, default=None, help="Largest coordinate to enumerate.")
def solve_cmd(powers, bound):
    """Enumerate positive solutions with every coordinate at most BOUND."""
    ty = _markov_type(powers)
    bound = bound if bound is not None else get_config().get('markov', {}).get('enumeration_bound', 100)
    solutions = enumerate_solutions(ty, bound)
    emit({'type': list(ty.powers), 'c': ty.c, 'solutions': [list(t) for t in solutions]},
         [str(ty)] + [str(t) for t in solutions])


@markov_group.command('reduce')
@click.argument('x', type=int)
@click.argument('y', type=int)
@click.argument('z', type=int)
@powers_option
@click.option('--normalize/--no-normalize', default=True,
              help="Continue from the minimum to the registry's canonical minimum.")
def reduce_cmd(x, y, z, powers, normalize):
    """Descend from (X, Y, Z) to a minimum solution."""
    ty = _markov_type(powers)
    try:
        minimum, minimum_type, word = reduce_to_minimum(MarkovTriple(x, y, z), ty)
        if normalize:
            minimum, minimum_type, bridge = normalize_minimum(minimum, minimum_type)
            word += bridge
    except MarkovError as e:
        raise MalformedInput(str(e))
    emit({'minimum': list(minimum), 'powers': list(minimum_type.powers), 'word': word},
         [f"minimum {minimum} powers {minimum_type.powers}",
          f"word: {' '.join(str(w) for w in word) or '(empty)'}"])


@markov_group.command('orbit')
@click.argument('x', type=int)
@click.argument('y', type=int)
@click.argument('z', type=int)
@powers_option
@click.option('--depth', type=int, default=3, show_default=True)
def orbit_cmd(x, y, z, powers, depth):
    """States reachable from (X, Y, Z) within DEPTH mutations."""
    ty = _markov_type(powers)
    try:
        states = orbit(MarkovTriple(x, y, z), ty, depth)
    except MarkovError as e:
        raise MalformedInput(str(e))
    rows = [{'triple': list(t), 'powers': list(p), 'word': list(w)} for (t, p), w in states.items()]
    emit(rows, [f"{t} {p} {' '.join(str(v) for v in w)}" for (t, p), w in states.items()])
