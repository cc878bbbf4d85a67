"""Markov-type equations l x^2 + m y^2 + n z^2 = c xyz and their mutations.

For three vanishing cycles with boundary C, the pairings x, y, z of C with
the cycles satisfy one of 14 such equations, c = sqrt(lmn(12-l-m-n)). Each
cycle mutation induces a Vieta jump on one coordinate followed by a swap:

- mutation 1: z jumps, then y and z swap; powers (l, n, m)
- mutation 2: y jumps, then x and y swap; powers (m, l, n)
- mutation 3: x jumps, then x and y swap; powers (m, l, n)
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from persistence.registry import row_for_powers
from services.errors import MarkovError

logger = logging.getLogger(__name__)

# Which coordinate each mutation's Vieta jump replaces
MUTATION_VIETA_COORDINATE: Dict[int, str] = {1: 'z', 2: 'y', 3: 'x'}

MUTATIONS = (1, 2, 3)

Powers = Tuple[int, int, int]


class MarkovTriple(NamedTuple):
    x: int
    y: int
    z: int

    def __str__(self):
        return f"({self.x},{self.y},{self.z})"


def markov_coefficient(l: int, m: int, n: int) -> int:
    """Exact square root of l*m*n*(12-l-m-n)."""
    if min(l, m, n) < 1:
        raise MarkovError(f"powers must be positive, got {(l, m, n)}")
    if l + m + n >= 12:
        raise MarkovError(f"l+m+n = {l + m + n} must be below 12")
    radicand = l * m * n * (12 - l - m - n)
    root = isqrt(radicand)
    if root * root != radicand:
        raise MarkovError(f"{radicand} is not a perfect square for powers {(l, m, n)}")
    return root


@dataclass(frozen=True)
class MarkovType:
    """Equation l x^2 + m y^2 + n z^2 = c xyz for powers in a fixed order."""
    powers: Powers
    c: int

    def __post_init__(self):
        object.__setattr__(self, 'powers', tuple(self.powers))
        l, m, n = self.powers
        if self.c != markov_coefficient(l, m, n):
            raise MarkovError(f"coefficient {self.c} does not match powers {self.powers}")
        if row_for_powers(self.powers) is None:
            raise MarkovError(f"powers {self.powers} are not an extremal rational type")

    @classmethod
    def of(cls, powers: Sequence[int]) -> 'MarkovType':
        l, m, n = powers
        return cls((l, m, n), markov_coefficient(l, m, n))

    @property
    def row_id(self) -> int:
        return row_for_powers(self.powers).row_id

    def __str__(self):
        l, m, n = self.powers
        return f"{l}x^2+{m}y^2+{n}z^2={self.c}xyz"


def is_solution(t: MarkovTriple, ty: MarkovType) -> bool:
    x, y, z = t
    l, m, n = ty.powers
    return l * x * x + m * y * y + n * z * z == ty.c * x * y * z


def _jump(numerator: int, divisor: int, old: int) -> int:
    if numerator % divisor:
        raise MarkovError(f"{numerator} is not divisible by {divisor}")
    new = numerator // divisor - old
    if new <= 0:
        raise MarkovError(f"mutation produced non-positive coordinate {new}")
    return new


def mutate(t: MarkovTriple, ty: MarkovType, which: int) -> Tuple[MarkovTriple, MarkovType]:
    """Shadow of cycle mutation ``which`` on the triple and the power order."""
    x, y, z = t
    l, m, n = ty.powers
    c = ty.c
    if which == 1:
        return MarkovTriple(x, _jump(c * x * y, n, z), y), MarkovType((l, n, m), c)
    if which == 2:
        return MarkovTriple(_jump(c * x * z, m, y), x, z), MarkovType((m, l, n), c)
    if which == 3:
        return MarkovTriple(y, _jump(c * y * z, l, x), z), MarkovType((m, l, n), c)
    raise MarkovError(f"unknown mutation {which}")


def apply_word(t: MarkovTriple, ty: MarkovType, word: Sequence[int]) -> Tuple[MarkovTriple, MarkovType]:
    for which in word:
        t, ty = mutate(t, ty, which)
    return t, ty


def enumerate_solutions(ty: MarkovType, bound: int) -> List[MarkovTriple]:
    """All positive solutions with max(x, y, z) <= bound, sorted.

    For fixed x, y the equation is a quadratic in z; its integer roots come
    from an exact square root of the discriminant.
    """
    l, m, n = ty.powers
    c = ty.c
    found = set()
    for x in range(1, bound + 1):
        for y in range(1, bound + 1):
            b = c * x * y
            disc = b * b - 4 * n * (l * x * x + m * y * y)
            if disc < 0:
                continue
            r = isqrt(disc)
            if r * r != disc:
                continue
            for numerator in (b - r, b + r):
                if numerator > 0 and numerator % (2 * n) == 0:
                    z = numerator // (2 * n)
                    if z <= bound:
                        found.add(MarkovTriple(x, y, z))
    return sorted(found)


def is_minimal(t: MarkovTriple, ty: MarkovType) -> bool:
    """No single mutation strictly lowers x + y + z."""
    return _descending_mutation(t, ty) is None


def _descending_mutation(t: MarkovTriple, ty: MarkovType) -> Optional[Tuple[int, MarkovTriple, MarkovType]]:
    for which in MUTATIONS:
        image, image_type = mutate(t, ty, which)
        if sum(image) < sum(t):
            return which, image, image_type
    return None


def reduce_to_minimum(t: MarkovTriple, ty: MarkovType) -> Tuple[MarkovTriple, MarkovType, List[int]]:
    """Greedy descent: apply the lowest-index mutation that lowers the sum until none does."""
    if not is_solution(t, ty):
        raise MarkovError(f"{t} does not solve {ty}")
    word: List[int] = []
    while True:
        step = _descending_mutation(t, ty)
        if step is None:
            return t, ty, word
        which, t, ty = step
        word.append(which)


def canonical_minimum(ty: MarkovType) -> Tuple[MarkovTriple, MarkovType]:
    """The registry row's (x, y, z) and power order for the equation of ``ty``."""
    row = row_for_powers(ty.powers)
    return MarkovTriple(*row.minimum), MarkovType.of(row.powers)


def normalize_minimum(t: MarkovTriple, ty: MarkovType, max_depth: int = 12,
                      sum_factor: int = 8) -> Tuple[MarkovTriple, MarkovType, List[int]]:
    """Carry a minimum solution to the registry's canonical minimum.

    Minima can differ in their coordinates (two equations have two minima)
    and in the order of the powers; the shortest connecting word is found
    breadth-first among states whose sum stays below ``sum_factor`` times
    the larger endpoint sum.
    """
    if not is_solution(t, ty):
        raise MarkovError(f"{t} does not solve {ty}")
    if not is_minimal(t, ty):
        raise MarkovError(f"{t} is not a minimum solution of {ty}")
    target, target_type = canonical_minimum(ty)
    word = _bridge(t, ty.powers, ty.c, target, target_type.powers, max_depth, sum_factor)
    if word is None:
        raise MarkovError(f"no mutation word of length <= {max_depth} joins {t} to {target} for {ty}")
    logger.debug(f"normalized {t} {ty.powers} -> {target} {target_type.powers} via {word}")
    return target, target_type, list(word)


@lru_cache(maxsize=4096)
def _bridge(start: MarkovTriple, powers: Powers, c: int, target: MarkovTriple, target_powers: Powers,
            max_depth: int, sum_factor: int) -> Optional[Tuple[int, ...]]:
    goal = (target, target_powers)
    cap = sum_factor * max(sum(start), sum(target))
    seen = {(start, powers): ()}
    queue = deque([(start, powers)])
    while queue:
        state = queue.popleft()
        word = seen[state]
        if state == goal:
            return word
        if len(word) >= max_depth:
            continue
        t, ty = state[0], MarkovType(state[1], c)
        for which in MUTATIONS:
            image, image_type = mutate(t, ty, which)
            key = (image, image_type.powers)
            if key in seen or sum(image) > cap:
                continue
            seen[key] = word + (which,)
            queue.append(key)
    return None


def orbit(t: MarkovTriple, ty: MarkovType, depth: int) -> Dict[Tuple[MarkovTriple, Powers], Tuple[int, ...]]:
    """States reachable within ``depth`` mutations, each with the first word found."""
    if not is_solution(t, ty):
        raise MarkovError(f"{t} does not solve {ty}")
    seen = {(t, ty.powers): ()}
    frontier = [(t, ty, ())]
    for _ in range(depth):
        next_frontier = []
        for triple, triple_type, word in frontier:
            for which in MUTATIONS:
                image, image_type = mutate(triple, triple_type, which)
                key = (image, image_type.powers)
                if key not in seen:
                    seen[key] = word + (which,)
                    next_frontier.append((image, image_type, word + (which,)))
        frontier = next_frontier
    return seen
