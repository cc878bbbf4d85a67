"""Exact arithmetic on H_1 of the one-holed torus.

A class ``(p, q)`` stands for ``p[v] + q[u]``. The symplectic pairing is
``<a, b> = q_a*p_b - p_a*q_b`` so that ``<u, v> = 1`` for ``u = (0, 1)`` and
``v = (1, 0)``. Python integers are arbitrary precision, so no overflow
handling is needed anywhere in the kernel.
"""

import logging
from math import gcd
from typing import NamedTuple, Tuple

from sympy.core.intfunc import igcdex

from services.errors import ConsistencyError, NonPrimitiveClassError

logger = logging.getLogger(__name__)

# 2x2 integer matrix stored row-major as ((a, b), (c, d)), acting on columns (p, q)
Matrix2 = Tuple[Tuple[int, int], Tuple[int, int]]


class HomologyClass(NamedTuple):
    """Integer pair (p, q) representing p[v] + q[u]."""
    p: int
    q: int

    def __neg__(self) -> 'HomologyClass':
        return HomologyClass(-self.p, -self.q)

    def __add__(self, other) -> 'HomologyClass':
        return HomologyClass(self.p + other.p, self.q + other.q)

    def __sub__(self, other) -> 'HomologyClass':
        return HomologyClass(self.p - other.p, self.q - other.q)

    def scale(self, k: int) -> 'HomologyClass':
        return HomologyClass(k * self.p, k * self.q)

    def __str__(self):
        return f"({self.p},{self.q})"


U = HomologyClass(0, 1)
V = HomologyClass(1, 0)


def pairing(a: HomologyClass, b: HomologyClass) -> int:
    """Intersection pairing <a, b>; antisymmetric and bilinear."""
    return a.q * b.p - a.p * b.q


def is_primitive(a: HomologyClass) -> bool:
    """True iff gcd(|p|, |q|) = 1 (the zero class is not primitive)."""
    return gcd(a.p, a.q) == 1


def require_primitive(a: HomologyClass, what: str = "class") -> HomologyClass:
    if not is_primitive(a):
        raise NonPrimitiveClassError(f"{what} {a} is not primitive")
    return a


def dehn_twist_action(c: HomologyClass, power: int, g: HomologyClass) -> HomologyClass:
    """Apply tau_c^power to g: g + power*<c, g>*c."""
    require_primitive(c, "twist curve")
    return g + c.scale(power * pairing(c, g))


def twist_matrix(c: HomologyClass, power: int) -> Matrix2:
    """Matrix of tau_c^power acting on column vectors (p, q)."""
    require_primitive(c, "twist curve")
    p, q = c
    return ((1 + power * p * q, -power * p * p),
            (power * q * q, 1 - power * p * q))


def apply_matrix(mat: Matrix2, c: HomologyClass) -> HomologyClass:
    (a, b), (cc, d) = mat
    return HomologyClass(a * c.p + b * c.q, cc * c.p + d * c.q)


def complete_symplectic_basis(u: HomologyClass) -> HomologyClass:
    """Return v with pairing(u, v) = 1, from the extended gcd of the coordinates.

    The Bezout coefficients returned by ``igcdex`` are minimal, which keeps the
    completed basis vector small.
    """
    require_primitive(u, "basis vector")
    x, y, g = igcdex(abs(u.q), abs(u.p))
    # |q_u|*x + |p_u|*y = 1, so p_v = sign(q_u)*x and q_v = -sign(p_u)*y
    v = HomologyClass(int(x) * _sign(u.q), -int(y) * _sign(u.p))
    if g != 1 or pairing(u, v) != 1:
        raise ConsistencyError(f"basis completion failed for {u}")
    return v


def normalize_sign(c: HomologyClass) -> HomologyClass:
    """Representative of {c, -c} whose first nonzero coordinate is positive."""
    if c.p < 0 or (c.p == 0 and c.q < 0):
        return -c
    return c


def _sign(k: int) -> int:
    return (k > 0) - (k < 0)
