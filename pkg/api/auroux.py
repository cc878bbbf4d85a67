"""Auroux invariant commands for length-2 factorizations."""

import click

from config import get_config
from services.auroux import (
    PrimitivePair, auroux_invariant, count_classes, count_table, equivalent,
)
from services.errors import CodecError, MonodromyError
from utils.codec import class_from_json, element_to_dict, loads
from .output import MalformedInput, emit


def _pair(first: str, second: str) -> PrimitivePair:
    try:
        return PrimitivePair(class_from_json(loads(first)), class_from_json(loads(second)))
    except (CodecError, MonodromyError) as e:
        raise MalformedInput(str(e))


@click.group('auroux')
def auroux_group():
    """Length-2 factorizations tau_C1 tau_C2 and their equivalence classes."""


@auroux_group.command('invariant')
@click.argument('c1')
@click.argument('c2')
def invariant_cmd(c1, c2):
    """Auroux invariant of the pair C1 C2, each given as JSON [p,q]."""
    invariant = auroux_invariant(_pair(c1, c2))
    emit({'n': invariant.n, 'k': invariant.k}, [str(invariant)])


@auroux_group.command('equiv')
@click.argument('a1')
@click.argument('a2')
@click.argument('b1')
@click.argument('b2')
def equiv_cmd(a1, a2, b1, b2):
    """Decide whether pairs (A1, A2) and (B1, B2) are equivalent."""
    ok, witness = equivalent(_pair(a1, a2), _pair(b1, b2))
    data = {'equivalent': ok, 'witness': None}
    lines = ['equivalent' if ok else 'not equivalent']
    if witness is not None:
        data['witness'] = {'braid_moves': witness.braid_moves,
                           'conjugator': element_to_dict(witness.conjugator)}
        lines.append(f"braid moves: {witness.braid_moves}")
        lines.append(f"conjugator: {[list(r) for r in witness.conjugator.mat]} ab={witness.conjugator.ab}")
    emit(data, lines)


@auroux_group.command('count')
@click.argument('n', type=click.IntRange(min=1), required=False)
@click.option('--table', 'limit', type=click.IntRange(min=1), default=None,
              help="Emit (n, class count) for n = 1..LIMIT.")
def count_cmd(n, limit):
    """Number of equivalence classes of pairs with pairing N."""
    if n is not None and limit is None:
        count = count_classes(n)
        emit({'n': n, 'count': count}, [str(count)])
        return
    limit = limit if limit is not None else get_config().get('auroux', {}).get('table_limit', 50)
    table = count_table(limit)
    emit([{'n': k, 'count': c} for k, c in table], [f"{k}\t{c}" for k, c in table])
