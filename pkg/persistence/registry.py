"""Canonical configurations of the 14 extremal rational types.

Cycles are written (p, q) = p[v] + q[u] with boundary C = u. The printed
table needs four corrections to satisfy the factorization identity with the
pairing fixed by row 1:

- row 4: cycles (1,-3), (2,-1), (1,0) (printed with the opposite q signs)
- row 6: cycles (1,-1), (1,0), (1,1) (printed as a copy of row 1)
- row 9: third cycle (1,1) (printed as (1,0))
- row 12: powers (1,2,8) (printed (2,2,8); l+m+n = 12 would zero the
  Markov coefficient)
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Tuple

from services.errors import RegistryError
from services.lattice import U, HomologyClass, pairing

logger = logging.getLogger(__name__)

# row_id, (l0, m0, n0), (C1min, C2min, C3min)
TABLE = (
    (1, (1, 1, 1), ((1, -3), (1, 0), (1, 3))),
    (2, (1, 1, 2), ((1, -4), (1, 0), (1, 2))),
    (3, (1, 2, 3), ((1, -3), (1, 0), (1, 1))),
    (4, (1, 1, 5), ((1, -3), (2, -1), (1, 0))),
    (5, (2, 2, 4), ((1, -2), (1, 0), (1, 1))),
    (6, (3, 3, 3), ((1, -1), (1, 0), (1, 1))),
    (7, (1, 2, 6), ((2, -3), (1, 0), (1, 1))),
    (8, (1, 1, 8), ((2, -3), (2, -1), (1, 0))),
    (9, (2, 4, 4), ((2, -1), (1, 0), (1, 1))),
    (10, (1, 3, 6), ((3, -2), (1, 0), (1, 1))),
    (11, (1, 1, 9), ((3, -2), (3, -1), (1, 0))),
    (12, (1, 2, 8), ((4, -3), (2, -1), (1, 0))),
    (13, (2, 3, 6), ((3, -2), (2, -1), (1, 0))),
    (14, (1, 5, 5), ((5, -3), (2, -1), (1, 0))),
)


@dataclass(frozen=True)
class CanonicalRow:
    """One registry row: powers, minimal cycles and boundary u."""
    row_id: int
    powers: Tuple[int, int, int]
    cycles: Tuple[HomologyClass, HomologyClass, HomologyClass]
    boundary: HomologyClass = U

    def factorization(self):
        from services.factorization import make_factorization
        return make_factorization(zip(self.cycles, self.powers), self.boundary)

    @property
    def minimum(self) -> Tuple[int, int, int]:
        """(x, y, z) = pairings of the boundary with the three cycles."""
        x, y, z = (pairing(self.boundary, c) for c in self.cycles)
        return x, y, z


_raw = tuple(
    CanonicalRow(row_id, powers, tuple(HomologyClass(*c) for c in cycles))
    for row_id, powers, cycles in TABLE
)

# Global registry instance
_registry = None


def raw_rows() -> Tuple[CanonicalRow, ...]:
    """Rows as stored, without validation."""
    return _raw


def row_for_powers(powers) -> Optional[CanonicalRow]:
    """Row whose power multiset equals ``powers``, if any."""
    wanted = Counter(powers)
    for row in _raw:
        if Counter(row.powers) == wanted:
            return row
    return None


def row_by_id(row_id: int) -> CanonicalRow:
    for row in get_registry():
        if row.row_id == row_id:
            return row
    raise KeyError(f"no registry row {row_id}")


def load_registry() -> List[CanonicalRow]:
    """Validate every row against the extremal identity; fail loudly otherwise."""
    from services.factorization import is_extremal_rational

    for row in _raw:
        if not is_extremal_rational(row.factorization()):
            raise RegistryError(f"registry row {row.row_id} fails the extremal identity")
    logger.info(f"Canonical registry validated: {len(_raw)} rows")
    return list(_raw)


def get_registry() -> Tuple[CanonicalRow, ...]:
    """Get the validated registry, loading it if necessary."""
    global _registry
    if _registry is None:
        _registry = tuple(load_registry())
    return _registry
