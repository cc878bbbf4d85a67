import random

import pytest

from persistence.registry import row_by_id
from services import fuzz
from services.errors import ClassificationError
from services.factorization import is_extremal_rational
from services.fuzz import run_fuzz, scramble, trial_rng


def test_scramble_keeps_identity_and_boundary():
    rng = random.Random(7)
    for _ in range(20):
        f, moves, conjugation = scramble(row_by_id(9), rng, 30, 5)
        assert len(moves) <= 30
        assert f.boundary == (0, 1)
        assert is_extremal_rational(f)


def test_trial_rng_is_deterministic():
    assert trial_rng(3, 4, 5).random() == trial_rng(3, 4, 5).random()
    assert trial_rng(3, 4, 5).random() != trial_rng(3, 4, 6).random()


@pytest.mark.parametrize('row_id', range(1, 15))
def test_run_fuzz_verifies_every_trial(row_id):
    results = run_fuzz(row_id, trials=8, seed=11)
    assert [r.trial for r in results] == list(range(8))
    assert all(r.ok for r in results), [r.to_dict() for r in results if not r.ok]


def test_run_fuzz_threaded_matches_serial():
    serial = run_fuzz(4, trials=12, seed=5, workers=1)
    threaded = run_fuzz(4, trials=12, seed=5, workers=4)
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in threaded]


def test_run_fuzz_reads_config_defaults(default_config):
    default_config['fuzz']['trials'] = 3
    assert len(run_fuzz(1)) == 3


def test_run_fuzz_replays_independently(mocker):
    mocker.patch.object(fuzz, 'verify_certificate', return_value=False)
    results = run_fuzz(2, trials=2, seed=0)
    assert not any(r.ok for r in results)
    assert all(r.stage == 'replay' for r in results)


def test_run_fuzz_reports_stage(mocker):
    mocker.patch.object(fuzz, 'classify', side_effect=ClassificationError('normalize', 'no bridge'))
    results = run_fuzz(3, trials=2, seed=0)
    assert [(r.ok, r.stage, r.error) for r in results] == [(False, 'normalize', 'no bridge')] * 2


def test_run_fuzz_long_scrambles():
    results = run_fuzz(1, trials=40, seed=0, max_moves=60)
    assert all(r.ok for r in results), [r.to_dict() for r in results if not r.ok]


def test_run_fuzz_reports_unexpected_errors(mocker):
    mocker.patch.object(fuzz, 'classify', side_effect=ValueError("boom"))
    results = run_fuzz(2, trials=3, seed=0)
    assert [(r.ok, r.stage, r.error) for r in results] == [(False, 'internal', 'ValueError: boom')] * 3


@pytest.mark.slow
def test_run_fuzz_full_size():
    for row_id in range(1, 15):
        results = run_fuzz(row_id, trials=1000, seed=0, max_moves=30, workers=4)
        assert all(r.ok for r in results)
