"""Randomized self-test command."""

import click

from config import get_config
from persistence.registry import TABLE
from services.fuzz import run_fuzz
from .output import VerificationFailed, emit


@click.command('fuzz')
@click.option('--type', 'row_id', type=click.IntRange(1, len(TABLE)), default=None,
              help="Registry row to scramble (default: every row).")
@click.option('--trials', type=click.IntRange(min=1), default=None)
@click.option('--seed', type=click.IntRange(min=0), default=None)
@click.option('--max-moves', type=click.IntRange(min=0), default=None)
@click.option('--workers', type=click.IntRange(min=1), default=None)
def fuzz_cmd(row_id, trials, seed, max_moves, workers):
    """Scramble canonical rows, classify them and replay the certificates."""
    if seed is None:
        seed = get_config().get('fuzz', {}).get('seed', 0)
    rows = [row_id] if row_id is not None else [row[0] for row in TABLE]
    summary, lines, failed = [], [], []
    for row in rows:
        results = run_fuzz(row, trials=trials, seed=seed, max_moves=max_moves, workers=workers)
        failures = [r for r in results if not r.ok]
        failed.extend(failures)
        summary.append({'row': row, 'trials': len(results), 'verified': len(results) - len(failures),
                        'failures': [r.to_dict() for r in failures]})
        lines.append(f"row {row}: {len(results) - len(failures)}/{len(results)} verified")
        lines.extend(f"  trial {r.trial}: [{r.stage}] {r.error}" for r in failures)
    emit({'seed': seed, 'rows': summary}, lines)
    if failed:
        raise VerificationFailed(f"{len(failed)} fuzz trial(s) failed (seed={seed}); rerun with --seed {seed} to reproduce")
