"""Auroux invariant of length-2 factorizations tau_C1 tau_C2.

A pair (C1, C2) of primitive classes with <C1, C2> = n > 0 is written in a
symplectic basis (C1, v') as C2 = n v' + k C1; the residue k mod n does not
depend on the completion v'. Hurwitz moves act by k -> -k^-1 and global
conjugation preserves k, so equivalence classes are the orbits of that
involution on (Z/n)^*.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Tuple

from sympy import Matrix, factorint, totient

from services import mcg
from services.errors import ConsistencyError, FactorizationError
from services.factorization import (
    Direction, Factorization, global_conjugate, hurwitz_move, make_factorization, same_factorization,
)
from services.lattice import (
    HomologyClass, complete_symplectic_basis, dehn_twist_action, pairing, require_primitive,
)
from services.mcg import MCGElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimitivePair:
    """Primitive classes with positive pairing n = <c1, c2>."""
    c1: HomologyClass
    c2: HomologyClass

    def __post_init__(self):
        object.__setattr__(self, 'c1', require_primitive(HomologyClass(*self.c1), "c1"))
        object.__setattr__(self, 'c2', require_primitive(HomologyClass(*self.c2), "c2"))
        if self.n <= 0:
            raise FactorizationError(f"pair {self.c1}, {self.c2} has pairing {self.n}; need n > 0")

    @property
    def n(self) -> int:
        return pairing(self.c1, self.c2)


@dataclass(frozen=True)
class AurouxInvariant:
    n: int
    k: int

    def __str__(self):
        return f"{self.k} mod {self.n}"


@dataclass(frozen=True)
class EquivalenceWitness:
    """Braid moves applied to the first pair, then a global conjugation."""
    braid_moves: int
    conjugator: MCGElement


def auroux_invariant(pair: PrimitivePair, completion: Optional[HomologyClass] = None) -> AurouxInvariant:
    """Residue k with c2 = n v' + k c1, v' completing c1 to a symplectic basis.

    ``completion`` overrides the v' chosen from the extended gcd; it must pair
    to 1 with c1.
    """
    v = completion if completion is not None else complete_symplectic_basis(pair.c1)
    if pairing(pair.c1, v) != 1:
        raise FactorizationError(f"{v} does not complete {pair.c1} to a symplectic basis")
    n = pair.n
    return AurouxInvariant(n, pairing(pair.c2, v) % n)


def braid_action(pair: PrimitivePair) -> PrimitivePair:
    """(C1, C2) -> (-tau_C1 C2, C1)."""
    return PrimitivePair(-dehn_twist_action(pair.c1, 1, pair.c2), pair.c1)


def pair_factorization(pair: PrimitivePair) -> Factorization:
    return make_factorization([(pair.c1, 1), (pair.c2, 1)])


def _basis_conjugator(source: PrimitivePair, target: PrimitivePair) -> MCGElement:
    """Mapping class sending source to target when both have the same invariant.

    The target completion is shifted by a multiple of c1 so that both pairs
    have the same integer coordinate k; the matrix then maps one symplectic
    basis onto the other.
    """
    n = source.n
    v1 = complete_symplectic_basis(source.c1)
    v3 = complete_symplectic_basis(target.c1)
    beta1, beta3 = pairing(source.c2, v1), pairing(target.c2, v3)
    shift, remainder = divmod(beta3 - beta1, n)
    if remainder:
        raise FactorizationError("conjugator requested for pairs with different invariants")
    v3 = v3 + target.c1.scale(shift)
    source_basis = Matrix([[source.c1.p, v1.p], [source.c1.q, v1.q]])
    target_basis = Matrix([[target.c1.p, v3.p], [target.c1.q, v3.q]])
    solved = target_basis * source_basis.inv()
    if solved.det() != 1 or not all(entry.is_integer for entry in solved):
        raise FactorizationError(f"basis matching produced a non-symplectic matrix {solved.tolist()}")
    mat = tuple(tuple(int(entry) for entry in row) for row in solved.tolist())
    return mcg.lift(mat)


def equivalent(p1: PrimitivePair, p2: PrimitivePair) -> Tuple[bool, Optional[EquivalenceWitness]]:
    """Decide equivalence under Hurwitz moves and global conjugation.

    Equivalent exactly when the invariants agree or k1 = -k2^-1 mod n. The
    witness is replayed on the length-2 factorizations before it is returned.
    """
    if p1.n != p2.n:
        return False, None
    n = p1.n
    k1, k2 = auroux_invariant(p1).k, auroux_invariant(p2).k
    if k1 == k2:
        braid_moves, source = 0, p1
    elif (k1 * k2 + 1) % n == 0:
        braid_moves, source = 1, braid_action(p1)
    else:
        return False, None
    witness = EquivalenceWitness(braid_moves, _basis_conjugator(source, p2))
    if not replay_witness(p1, p2, witness):
        raise ConsistencyError(f"witness for {p1} ~ {p2} does not replay")
    logger.debug(f"pairs equivalent with invariant {k2} mod {n}: {witness}")
    return True, witness


def replay_witness(p1: PrimitivePair, p2: PrimitivePair, witness: EquivalenceWitness) -> bool:
    f = pair_factorization(p1)
    for _ in range(witness.braid_moves):
        f = hurwitz_move(f, 1, Direction.FORWARD)
    return same_factorization(global_conjugate(f, witness.conjugator), pair_factorization(p2))


def euler_phi(n: int) -> int:
    return int(totient(n))


def psi(n: int) -> int:
    """1 when n = 2^i k with k odd and i <= 1, else 0."""
    return 1 if n % 4 else 0


def count_classes(n: int) -> int:
    """(phi(n) + psi(n) * prod over odd p | n of (1 + (-1)^((p-1)/2))) / 2."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    local = 1
    for p in factorint(n):
        if p % 2:
            local *= 1 + (-1) ** ((p - 1) // 2)
    return (euler_phi(n) + psi(n) * local) // 2


def count_classes_bruteforce(n: int) -> int:
    """Orbits of k -> -k^-1 on the units mod n."""
    return len(class_representatives(n))


def class_representatives(n: int) -> List[int]:
    """Smallest residue of each equivalence class of F_n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return [0]
    seen = set()
    representatives = []
    for k in range(1, n):
        if gcd(k, n) != 1 or k in seen:
            continue
        partner = -pow(k, -1, n) % n
        seen.update((k, partner))
        representatives.append(k)
    return representatives


def residue_count_r(n: int) -> int:
    """Number of k mod n with k^2 = -1, from the factorization of n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    result = 1
    for p, a in factorint(n).items():
        if p == 2:
            result *= 1 if a <= 1 else 0
        else:
            result *= 1 + (-1) ** ((p - 1) // 2)
    return result


def residue_count_r_bruteforce(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return sum(1 for k in range(n) if (k * k + 1) % n == 0)


def count_table(limit: int) -> List[Tuple[int, int]]:
    """(n, class count) for n = 1..limit."""
    return [(n, count_classes(n)) for n in range(1, limit + 1)]
