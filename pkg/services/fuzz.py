"""Randomized self-test: scramble canonical rows and classify them back."""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from config import get_config
from persistence.registry import CanonicalRow, row_by_id
from services import mcg
from services.classifier import classify, verify_certificate
from services.errors import ClassificationError, MonodromyError
from services.factorization import Direction, Factorization, apply_moves, global_conjugate
from services.lattice import U
from services.mcg import MCGElement

logger = logging.getLogger(__name__)


@dataclass
class FuzzResult:
    """Outcome of one scramble-classify-replay trial."""
    trial: int
    row_id: int
    ok: bool
    moves: int = 0
    word: List[int] = field(default_factory=list)
    stage: Optional[str] = None
    error: Optional[str] = None

    def to_dict(self):
        return {
            'trial': self.trial,
            'row': self.row_id,
            'ok': self.ok,
            'moves': self.moves,
            'word': self.word,
            'stage': self.stage,
            'error': self.error,
        }


def scramble(row: CanonicalRow, rng: random.Random, max_moves: int,
             power_bound: int) -> Tuple[Factorization, List[Tuple[int, Direction]], MCGElement]:
    """Up to ``max_moves`` random block Hurwitz moves, then conjugation by tau_u^k."""
    moves = [(rng.randint(1, 2), rng.choice((Direction.FORWARD, Direction.INVERSE)))
             for _ in range(rng.randint(0, max_moves))]
    conjugation = mcg.twist(U, rng.randint(-power_bound, power_bound))
    scrambled = global_conjugate(apply_moves(row.factorization(), moves), conjugation)
    return scrambled, moves, conjugation


def trial_rng(seed: int, row_id: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{row_id}:{trial}")


def run_trial(row_id: int, trial: int, seed: int, max_moves: int, power_bound: int) -> FuzzResult:
    row = row_by_id(row_id)
    f, moves, _ = scramble(row, trial_rng(seed, row_id, trial), max_moves, power_bound)
    try:
        certificate = classify(f)
    except ClassificationError as e:
        logger.error(f"fuzz seed={seed} row={row_id} trial={trial}: [{e.stage}] {e.message}")
        return FuzzResult(trial, row_id, False, len(moves), stage=e.stage, error=e.message)
    except MonodromyError as e:
        logger.error(f"fuzz seed={seed} row={row_id} trial={trial}: {e}")
        return FuzzResult(trial, row_id, False, len(moves), stage='identity', error=str(e))
    except Exception as e:
        logger.exception(f"fuzz seed={seed} row={row_id} trial={trial}: unexpected {type(e).__name__}")
        return FuzzResult(trial, row_id, False, len(moves), stage='internal',
                          error=f"{type(e).__name__}: {e}")

    # Independent replay; classify's own check is not trusted here
    ok = certificate.row == row_id and verify_certificate(f, certificate)
    if not ok:
        logger.error(f"fuzz seed={seed} row={row_id} trial={trial}: certificate did not replay")
    return FuzzResult(trial, row_id, ok, len(moves), list(certificate.word),
                      stage=None if ok else 'replay',
                      error=None if ok else "certificate did not replay to the registry row")


def run_fuzz(row_id: int, trials: Optional[int] = None, seed: Optional[int] = None,
             max_moves: Optional[int] = None, power_bound: Optional[int] = None,
             workers: Optional[int] = None) -> List[FuzzResult]:
    """Run ``trials`` seeded trials on registry row ``row_id``, ordered by trial index."""
    settings = get_config().get('fuzz', {})
    trials = trials if trials is not None else settings.get('trials', 100)
    seed = seed if seed is not None else settings.get('seed', 0)
    max_moves = max_moves if max_moves is not None else settings.get('max_moves', 30)
    power_bound = power_bound if power_bound is not None else settings.get('conjugation_power_bound', 5)
    workers = workers if workers is not None else settings.get('workers', 1)

    row_by_id(row_id)

    def one(trial: int) -> FuzzResult:
        return run_trial(row_id, trial, seed, max_moves, power_bound)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(one, range(trials)))
    else:
        results = [one(trial) for trial in range(trials)]

    failures = sum(1 for r in results if not r.ok)
    logger.info(f"fuzz row {row_id}: {trials - failures}/{trials} verified (seed={seed})")
    return results
