"""Registry dump and table verification commands."""

import click

from persistence.registry import raw_rows
from services.factorization import check_table
from utils.codec import element_to_dict, factorization_to_dict
from .output import VerificationFailed, emit


@click.command('verify-table')
def verify_table_cmd():
    """Check every canonical row against the extremal identity."""
    checks = check_table()
    emit([{'row': c.row_id, 'ok': c.ok, 'evaluated': element_to_dict(c.evaluated),
           'target': element_to_dict(c.target)} for c in checks],
         [f"row {c.row_id}: {'OK' if c.ok else 'FAIL'}" for c in checks])
    bad = [c.row_id for c in checks if not c.ok]
    if bad:
        raise VerificationFailed(f"rows failing the identity: {bad}")


@click.group('registry')
def registry_group():
    """The 14 canonical configurations."""


@registry_group.command('dump')
def dump_cmd():
    """Print every canonical row."""
    rows = raw_rows()
    emit([{'row': r.row_id, 'powers': list(r.powers), 'minimum': list(r.minimum),
           'factorization': factorization_to_dict(r.factorization())} for r in rows],
         [f"row {r.row_id}: powers {r.powers} cycles {' '.join(str(c) for c in r.cycles)}"
          for r in rows])
