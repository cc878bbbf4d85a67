import pytest

from persistence.registry import raw_rows
from services.errors import MarkovError
from services.markov import (
    MUTATION_VIETA_COORDINATE, MarkovTriple, MarkovType, apply_word, canonical_minimum,
    enumerate_solutions, is_minimal, is_solution, markov_coefficient, mutate,
    normalize_minimum, orbit, reduce_to_minimum,
)

COEFFICIENTS = {
    (1, 1, 1): 3, (1, 1, 2): 4, (1, 2, 3): 6, (1, 1, 5): 5, (2, 2, 4): 8, (3, 3, 3): 9,
    (1, 2, 6): 6, (1, 1, 8): 4, (2, 4, 4): 8, (1, 3, 6): 6, (1, 1, 9): 3, (1, 2, 8): 4,
    (2, 3, 6): 6, (1, 5, 5): 5,
}


def test_markov_coefficients():
    for row in raw_rows():
        assert markov_coefficient(*row.powers) == COEFFICIENTS[row.powers]


@pytest.mark.parametrize('powers', [(2, 2, 8), (0, 1, 1), (1, 1, 3)])
def test_markov_coefficient_rejects(powers):
    with pytest.raises(MarkovError):
        markov_coefficient(*powers)


def test_markov_type_requires_registry_multiset():
    with pytest.raises(MarkovError):
        MarkovType((1, 1, 1), 4)
    assert MarkovType.of((8, 2, 1)).row_id == 12


@pytest.mark.parametrize('triple, powers', [
    ((1, 1, 1), (1, 1, 1)),
    ((4, 2, 1), (1, 2, 8)),
    ((2, 5, 29), (1, 1, 1)),
])
def test_is_solution(triple, powers):
    assert is_solution(MarkovTriple(*triple), MarkovType.of(powers))


def test_mutate_examples():
    t, ty = mutate(MarkovTriple(1, 1, 1), MarkovType.of((1, 1, 1)), 1)
    assert t == (1, 2, 1) and ty.powers == (1, 1, 1)
    t, ty = mutate(MarkovTriple(4, 2, 1), MarkovType.of((1, 2, 8)), 2)
    assert t == (6, 4, 1) and ty.powers == (2, 1, 8)
    assert is_solution(t, ty)
    t, ty = mutate(MarkovTriple(1, 1, 1), MarkovType.of((3, 3, 3)), 1)
    assert t == (1, 2, 1)
    with pytest.raises(MarkovError):
        mutate(t, ty, 4)


def test_mutations_preserve_solutions_and_coefficient(row):
    ty = MarkovType.of(row.powers)
    for (t, powers), _ in orbit(MarkovTriple(*row.minimum), ty, 5).items():
        assert is_solution(t, MarkovType.of(powers))
        assert markov_coefficient(*powers) == ty.c


def test_mutation_jump_coordinates():
    assert MUTATION_VIETA_COORDINATE == {1: 'z', 2: 'y', 3: 'x'}


def test_mutation_two_then_three_is_identity(row):
    start = (MarkovTriple(*row.minimum), MarkovType.of(row.powers))
    for (t, powers), _ in orbit(*start, 3).items():
        ty = MarkovType.of(powers)
        assert apply_word(t, ty, [2, 3]) == (t, ty)
        assert apply_word(t, ty, [3, 2]) == (t, ty)


def test_enumerate_examples():
    assert enumerate_solutions(MarkovType.of((1, 1, 1)), 2) == [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert enumerate_solutions(MarkovType.of((3, 3, 3)), 1) == [(1, 1, 1)]
    assert enumerate_solutions(MarkovType.of((1, 5, 5)), 0) == []


def test_enumerate_matches_brute_force():
    ty = MarkovType.of((1, 2, 6))
    bound = 25
    brute = [MarkovTriple(x, y, z)
             for x in range(1, bound + 1) for y in range(1, bound + 1) for z in range(1, bound + 1)
             if is_solution(MarkovTriple(x, y, z), ty)]
    assert enumerate_solutions(ty, bound) == brute


def test_reduce_examples():
    t, ty, word = reduce_to_minimum(MarkovTriple(2, 5, 29), MarkovType.of((1, 1, 1)))
    assert t == (1, 1, 1)
    assert word == [1, 1, 3]
    t, ty, word = reduce_to_minimum(MarkovTriple(1, 1, 1), MarkovType.of((1, 1, 1)))
    assert word == []
    t, ty, word = reduce_to_minimum(MarkovTriple(4, 2, 1), MarkovType.of((1, 2, 8)))
    assert t.z == 1


def test_reduce_rejects_non_solution():
    with pytest.raises(MarkovError):
        reduce_to_minimum(MarkovTriple(1, 2, 3), MarkovType.of((1, 1, 1)))


def test_bridge_sequences():
    assert apply_word(MarkovTriple(1, 2, 1), MarkovType.of((1, 1, 5)), [1, 1, 2]) == \
        (MarkovTriple(2, 1, 1), MarkovType.of((1, 1, 5)))
    assert apply_word(MarkovTriple(5, 2, 1), MarkovType.of((1, 5, 5)), [1, 2, 2]) == \
        (MarkovTriple(5, 1, 2), MarkovType.of((1, 5, 5)))


def test_normalize_joins_the_two_minima():
    t, ty, word = normalize_minimum(MarkovTriple(2, 1, 1), MarkovType.of((1, 1, 5)))
    assert (t, ty.powers) == ((1, 2, 1), (1, 1, 5))
    assert apply_word(MarkovTriple(2, 1, 1), MarkovType.of((1, 1, 5)), word) == (t, ty)
    t, ty, word = normalize_minimum(MarkovTriple(5, 1, 2), MarkovType.of((1, 5, 5)))
    assert (t, ty.powers) == ((5, 2, 1), (1, 5, 5))
    assert apply_word(MarkovTriple(5, 1, 2), MarkovType.of((1, 5, 5)), word) == (t, ty)


def test_normalize_canonical_minimum_is_empty_word(row):
    t, ty = canonical_minimum(MarkovType.of(row.powers))
    assert normalize_minimum(t, ty) == (t, ty, [])


def test_normalize_rejects_non_minimum():
    with pytest.raises(MarkovError):
        normalize_minimum(MarkovTriple(2, 5, 29), MarkovType.of((1, 1, 1)))


def test_every_small_solution_reduces_to_canonical(row):
    ty = MarkovType.of(row.powers)
    target = canonical_minimum(ty)
    for t in enumerate_solutions(ty, 100):
        minimum, minimum_type, descent = reduce_to_minimum(t, ty)
        assert is_minimal(minimum, minimum_type)
        final, final_type, bridge = normalize_minimum(minimum, minimum_type)
        assert final.z == 1
        assert (final, final_type) == target
        assert apply_word(t, ty, descent + bridge) == target


def test_reduce_from_permuted_powers(row):
    # the solution set of a permuted equation is the permuted solution set
    l, m, n = row.powers
    x, y, z = row.minimum
    t, ty = MarkovTriple(z, x, y), MarkovType.of((n, l, m))
    minimum, minimum_type, word = reduce_to_minimum(t, ty)
    final, final_type, _ = normalize_minimum(minimum, minimum_type)
    assert (final, final_type.powers) == (row.minimum, row.powers)


def test_orbit_depth_zero_and_words():
    t, ty = MarkovTriple(1, 1, 1), MarkovType.of((1, 1, 1))
    assert orbit(t, ty, 0) == {(t, (1, 1, 1)): ()}
    states = orbit(t, ty, 4)
    for (image, powers), word in states.items():
        assert apply_word(t, ty, word) == (image, MarkovType.of(powers))
