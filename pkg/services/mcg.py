"""Faithful model of MCG(Sigma_{1,1}) as (SL(2,Z) matrix, abelianization) pairs.

The symplectic representation is onto SL(2,Z) with kernel the center, which
is generated by the boundary twist delta; delta abelianizes to 12 while every
non-separating twist abelianizes to 1. Two elements built from twists and
delta are therefore equal exactly when both their matrices and their
abelianizations agree.

Product notation ``a*b`` means b is applied first, so matrices multiply in
the written order.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from services.errors import ConsistencyError
from services.lattice import (
    HomologyClass, Matrix2, U, V, apply_matrix, require_primitive, twist_matrix,
)

logger = logging.getLogger(__name__)

IDENTITY_MATRIX: Matrix2 = ((1, 0), (0, 1))


@dataclass(frozen=True)
class MCGElement:
    """Mapping class as (matrix, abelianization)."""
    mat: Matrix2
    ab: int

    def __post_init__(self):
        if det(self.mat) != 1:
            raise ValueError(f"matrix {self.mat} does not have determinant 1")

    def __mul__(self, other: 'MCGElement') -> 'MCGElement':
        return compose(self, other)


def det(mat: Matrix2) -> int:
    (a, b), (c, d) = mat
    return a * d - b * c


def mat_mul(x: Matrix2, y: Matrix2) -> Matrix2:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h),
            (c * e + d * g, c * f + d * h))


def mat_inverse(mat: Matrix2) -> Matrix2:
    """Inverse of a determinant-1 matrix."""
    (a, b), (c, d) = mat
    return ((d, -b), (-c, a))


def identity() -> MCGElement:
    return MCGElement(IDENTITY_MATRIX, 0)


def twist(c: HomologyClass, power: int) -> MCGElement:
    """tau_c^power; non-separating twists abelianize to 1 each."""
    return MCGElement(twist_matrix(c, power), power)


def delta() -> MCGElement:
    """Boundary twist: acts trivially on homology, abelianizes to 12."""
    return MCGElement(IDENTITY_MATRIX, 12)


def compose(a: MCGElement, b: MCGElement) -> MCGElement:
    return MCGElement(mat_mul(a.mat, b.mat), a.ab + b.ab)


def inverse(a: MCGElement) -> MCGElement:
    return MCGElement(mat_inverse(a.mat), -a.ab)


def equals(a: MCGElement, b: MCGElement) -> bool:
    return a.mat == b.mat and a.ab == b.ab


def power(a: MCGElement, k: int) -> MCGElement:
    result = identity()
    base = a if k >= 0 else inverse(a)
    for _ in range(abs(k)):
        result = compose(result, base)
    return result


def product(elements) -> MCGElement:
    result = identity()
    for element in elements:
        result = compose(result, element)
    return result


def conjugate_twist(phi: MCGElement, c: HomologyClass, power: int) -> Tuple[HomologyClass, int]:
    """phi * tau_c^power * phi^-1 = tau_{phi(c)}^power."""
    require_primitive(c, "twist curve")
    return apply_matrix(phi.mat, c), power


def trace(e: MCGElement) -> int:
    (a, _), (_, d) = e.mat
    return a + d


def quadratic_form(e: MCGElement) -> Tuple[int, int, int]:
    """Coefficients (A, B, C) with <mat*g, g> = A p^2 + B pq + C q^2."""
    (a, b), (c, d) = e.mat
    return c, d - a, -b


def discriminant(e: MCGElement) -> int:
    """Discriminant B^2 - 4AC of the form <e(g), g>; equals trace^2 - 4."""
    big_a, big_b, big_c = quadratic_form(e)
    return big_b * big_b - 4 * big_a * big_c


# S = tau_v tau_u tau_v sends (p, q) to (-q, p)
_S_WORD: List[Tuple[HomologyClass, int]] = [(V, 1), (U, 1), (V, 1)]


def lift_word(mat: Matrix2) -> List[Tuple[HomologyClass, int]]:
    """Write an SL(2,Z) matrix as a product of twists about u and v.

    Euclidean reduction of the first column: left multiplication by
    tau_v^k subtracts k times the second row from the first, and S swaps the
    rows (with a sign). Returns the twist blocks of ``mat`` in product order.
    """
    if det(mat) != 1:
        raise ValueError(f"matrix {mat} does not have determinant 1")
    (a, b), (c, d) = mat
    applied: List[Tuple[HomologyClass, int]] = []  # left multipliers, first applied first
    while c != 0:
        k = a // c
        if k:
            a, b = a - k * c, b - k * d
            applied.append((V, k))
        a, b, c, d = -c, -d, a, b
        applied.extend(reversed(_S_WORD))
    if a == -1:
        a, b, c, d = -a, -b, -c, -d
        applied.extend(reversed(_S_WORD + _S_WORD))
    if b:
        applied.append((V, b))
    # L_n ... L_1 * mat = I, so mat = L_1^-1 ... L_n^-1
    return [(cycle, -k) for cycle, k in applied]


def lift(mat: Matrix2) -> MCGElement:
    """A mapping class with the given symplectic matrix, built from twists."""
    element = product(twist(cycle, k) for cycle, k in lift_word(mat))
    if element.mat != tuple(tuple(row) for row in mat):
        raise ConsistencyError(f"lift of {mat} failed")
    return element
