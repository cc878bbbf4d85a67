"""Monodromy factorizations as ordered blocks of twist powers.

A block ``(C, n)`` is the monodromy tau_C^n of an I_n fiber. Hurwitz moves
and global conjugation act on whole blocks; since tau_C = tau_{-C}, cycles
are only meaningful up to sign and exact comparisons go through
:func:`normalized`.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from services import mcg
from services.errors import FactorCountError, FactorizationError
from services.lattice import (
    HomologyClass, apply_matrix, dehn_twist_action, normalize_sign, require_primitive,
)
from services.mcg import MCGElement

logger = logging.getLogger(__name__)


class Direction(Enum):
    """Direction of a Hurwitz move: sigma_i or sigma_i^-1."""
    FORWARD = "forward"
    INVERSE = "inverse"


# Cycle-level mutation -> block Hurwitz move (1-based position, direction)
MUTATION_MOVES: Dict[int, Tuple[int, Direction]] = {
    1: (2, Direction.FORWARD),
    2: (1, Direction.FORWARD),
    3: (1, Direction.INVERSE),
}


@dataclass(frozen=True)
class TwistFactor:
    """Block tau_cycle^power."""
    cycle: HomologyClass
    power: int

    def __post_init__(self):
        object.__setattr__(self, 'cycle', HomologyClass(*self.cycle))
        require_primitive(self.cycle, "vanishing cycle")
        if self.power < 1:
            raise FactorizationError(f"power must be positive, got {self.power}")


@dataclass(frozen=True)
class Factorization:
    """Ordered twist blocks plus the boundary curve class C (absent for length-2 pairs)."""
    factors: Tuple[TwistFactor, ...]
    boundary: Optional[HomologyClass] = None

    def __post_init__(self):
        object.__setattr__(self, 'factors', tuple(self.factors))
        if self.boundary is not None:
            object.__setattr__(self, 'boundary', HomologyClass(*self.boundary))
            require_primitive(self.boundary, "boundary cycle")

    @property
    def powers(self) -> Tuple[int, ...]:
        return tuple(f.power for f in self.factors)

    @property
    def cycles(self) -> Tuple[HomologyClass, ...]:
        return tuple(f.cycle for f in self.factors)

    def __len__(self):
        return len(self.factors)


def make_factorization(blocks: Iterable[Tuple[Tuple[int, int], int]],
                       boundary: Optional[Tuple[int, int]] = None) -> Factorization:
    """Build a factorization from ((p, q), power) pairs."""
    return Factorization(
        tuple(TwistFactor(HomologyClass(*cycle), power) for cycle, power in blocks),
        HomologyClass(*boundary) if boundary is not None else None,
    )


def evaluate(f: Factorization) -> MCGElement:
    """Product of the blocks in written order (leftmost factor outermost)."""
    return mcg.product(mcg.twist(factor.cycle, factor.power) for factor in f.factors)


def extremal_target(powers: Tuple[int, ...], boundary: HomologyClass) -> MCGElement:
    """delta * tau_C^(l+m+n-12)."""
    require_primitive(boundary, "boundary cycle")
    return mcg.compose(mcg.delta(), mcg.twist(boundary, sum(powers) - 12))


def satisfies_extremal_identity(f: Factorization) -> bool:
    """True iff evaluate(f) equals delta * tau_C^(sum - 12), regardless of the power multiset."""
    _require_three(f)
    return mcg.equals(evaluate(f), extremal_target(f.powers, f.boundary))


def is_extremal_rational(f: Factorization) -> bool:
    """Three blocks whose power multiset is a registry type and whose product is extremal."""
    from persistence.registry import row_for_powers

    _require_three(f)
    if row_for_powers(f.powers) is None:
        return False
    return satisfies_extremal_identity(f)


def _require_three(f: Factorization):
    if len(f) != 3:
        raise FactorCountError(f"expected 3 factors, got {len(f)}")
    if f.boundary is None:
        raise FactorizationError("extremal factorizations need a boundary cycle")


def hurwitz_move(f: Factorization, i: int, direction: Direction = Direction.FORWARD) -> Factorization:
    """Block Hurwitz move at 1-based position i.

    forward: (c, a), (d, b) -> (tau_c^a d, b), (c, a)
    inverse: (c, a), (d, b) -> (d, b), (tau_d^-b c, a)
    """
    if not 1 <= i < len(f):
        raise FactorizationError(f"Hurwitz position {i} out of range for length {len(f)}")
    left, right = f.factors[i - 1], f.factors[i]
    if direction is Direction.FORWARD:
        moved = (TwistFactor(dehn_twist_action(left.cycle, left.power, right.cycle), right.power), left)
    else:
        moved = (right, TwistFactor(dehn_twist_action(right.cycle, -right.power, left.cycle), left.power))
    factors = f.factors[:i - 1] + moved + f.factors[i + 1:]
    return Factorization(factors, f.boundary)


def apply_moves(f: Factorization, moves: Iterable[Tuple[int, Direction]]) -> Factorization:
    for position, direction in moves:
        f = hurwitz_move(f, position, direction)
    return f


def apply_mutation_word(f: Factorization, word: Iterable[int]) -> Factorization:
    """Replay cycle mutations (1, 2, 3) as block Hurwitz moves."""
    try:
        return apply_moves(f, (MUTATION_MOVES[which] for which in word))
    except KeyError as e:
        raise FactorizationError(f"unknown mutation {e.args[0]}") from e


def global_conjugate(f: Factorization, phi: MCGElement) -> Factorization:
    """Map every cycle, the boundary included, by the matrix of phi."""
    factors = tuple(TwistFactor(apply_matrix(phi.mat, factor.cycle), factor.power)
                    for factor in f.factors)
    boundary = apply_matrix(phi.mat, f.boundary) if f.boundary is not None else None
    return Factorization(factors, boundary)


def normalized(f: Factorization) -> Factorization:
    """Copy with every cycle replaced by its sign representative."""
    factors = tuple(TwistFactor(normalize_sign(factor.cycle), factor.power) for factor in f.factors)
    boundary = normalize_sign(f.boundary) if f.boundary is not None else None
    return Factorization(factors, boundary)


def same_factorization(a: Factorization, b: Factorization) -> bool:
    """Exact equality of blocks up to the sign of each cycle."""
    return normalized(a) == normalized(b)


def canonical_registry():
    """The 14 validated canonical rows."""
    from persistence.registry import get_registry
    return get_registry()


@dataclass
class RowCheck:
    """Result of verifying one registry row."""
    row_id: int
    ok: bool
    evaluated: MCGElement
    target: MCGElement
    power_sum_matches: bool = field(default=True)


def check_table(rows=None) -> List[RowCheck]:
    """Verify evaluate(row) = delta * tau_u^(s-12) for every row, including the abelianization count."""
    from persistence.registry import raw_rows

    results = []
    for row in rows if rows is not None else raw_rows():
        f = row.factorization()
        evaluated = evaluate(f)
        target = extremal_target(f.powers, f.boundary)
        power_sum_matches = evaluated.ab == sum(f.powers) == target.ab
        ok = mcg.equals(evaluated, target) and power_sum_matches
        results.append(RowCheck(row.row_id, ok, evaluated, target, power_sum_matches))
        logger.debug(f"row {row.row_id}: evaluated={evaluated} target={target} ok={ok}")
    return results
