"""Formal symplectomorphisms of the 2-torus and their group structure.

An automorphism here is the ring map x -> x*u(x,y), y -> y*v(x,y) with unit
multipliers u, v congruent to 1 modulo the maximal ideal, computed exactly at
a fixed truncation order.  A wall is a primitive direction (a,b) in the closed
first quadrant carrying a function f(z) in z = x^a y^b with f(0) = 1; its
automorphism acts by x -> x f^{-b}, y -> y f^{a}.

Composition is ring-map composition: (outer o inner)(g) = outer(inner(g)).
The convention is pinned by a calibration test: the commutator of the degree-1
generators must equal the single wall (1,1) with function 1+z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from .series import Series, UniSeries

__all__ = [
    "Direction",
    "Wall",
    "VertexAutomorphism",
    "wall_to_automorphism",
    "generators",
    "polynomial_generators",
    "symplectic_check",
]


@dataclass(frozen=True, order=True)
class Direction:
    """A primitive integer vector (a, b) != (0, 0)."""

    a: int
    b: int

    def __post_init__(self):
        if (self.a, self.b) == (0, 0):
            raise ValueError("direction (0,0) is not allowed")
        if gcd(abs(self.a), abs(self.b)) != 1:
            raise ValueError(f"direction ({self.a},{self.b}) is not primitive")

    @property
    def slope(self) -> Fraction:
        if self.a == 0:
            raise ZeroDivisionError("vertical direction has no finite slope")
        return Fraction(self.b, self.a)

    def slope_key(self) -> Tuple[int, Fraction]:
        # vertical rays sort above every finite slope
        if self.a == 0:
            return (1, Fraction(0))
        return (0, Fraction(self.b, self.a))

    def is_interior(self) -> bool:
        return self.a > 0 and self.b > 0

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class Wall:
    """A direction in the closed first quadrant with attached function f, f(0)=1."""

    direction: Direction
    function: UniSeries

    def __post_init__(self):
        if self.direction.a < 0 or self.direction.b < 0:
            raise ValueError("wall direction must lie in the closed first quadrant")
        if self.function.constant_term != 1:
            raise ValueError("wall function must have constant term 1")


class VertexAutomorphism:
    """Automorphism x -> x*u, y -> y*v with u, v units of constant term 1."""

    __slots__ = ("order", "u", "v")

    def __init__(self, u: Series, v: Series):
        if u.order != v.order:
            raise ValueError("mismatched truncation orders")
        if u.constant_term != 1 or v.constant_term != 1:
            raise ValueError("multipliers must have constant term 1")
        self.order = u.order
        self.u = u
        self.v = v

    @classmethod
    def identity(cls, order: int) -> "VertexAutomorphism":
        one = Series.one(order)
        return cls(one, one)

    def is_identity(self) -> bool:
        one = Series.one(self.order)
        return self.u == one and self.v == one

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexAutomorphism):
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self) -> str:
        return f"VertexAutomorphism(N={self.order}, u={self.u.format()}, v={self.v.format()})"

    def apply(self, s: Series) -> Series:
        """Image of an arbitrary series under the ring map."""
        return s.substitute(self.u, self.v)

    def compose(self, inner: "VertexAutomorphism") -> "VertexAutomorphism":
        """(self o inner): apply inner first, then self, as ring maps.

        (self o inner)(x) = self(x * u_inner) = x * u_self * self(u_inner).
        """
        if self.order != inner.order:
            raise ValueError("mismatched truncation orders")
        u = self.u * inner.u.substitute(self.u, self.v)
        v = self.v * inner.v.substitute(self.u, self.v)
        return VertexAutomorphism(u, v)

    def invert(self) -> "VertexAutomorphism":
        """Inverse ring map, solved order by order as a fixed point."""
        N = self.order
        ui = self.u.invert_unit()
        vi = self.v.invert_unit()
        p, q = ui, vi
        for _ in range(N + 1):
            p_next = ui.substitute(p, q)
            q_next = vi.substitute(p, q)
            if p_next == p and q_next == q:
                break
            p, q = p_next, q_next
        inv = VertexAutomorphism(p, q)
        if not self.compose(inv).is_identity():
            raise ArithmeticError("automorphism inversion failed to converge")
        return inv


def wall_to_automorphism(w: Wall, order: int) -> VertexAutomorphism:
    """theta_{(a,b),f}: x -> x f^{-b}, y -> y f^{a} expanded at truncation ``order``."""
    a, b = w.direction.a, w.direction.b
    f = w.function.to_series(a, b, order)
    return VertexAutomorphism(f.pow_int(-b), f.pow_int(a))


def _poly_wall(direction: Direction, coeffs: Sequence, order: int) -> Wall:
    K = order // (direction.a + direction.b)
    return Wall(direction, UniSeries(K, dict(enumerate(coeffs))))


def generators(ell1: int, ell2: int, order: int) -> Tuple[VertexAutomorphism, VertexAutomorphism]:
    """The pair (theta_{(1,0),(1+tx)^ell1}, theta_{(0,1),(1+ty)^ell2})."""
    if ell1 < 1 or ell2 < 1:
        raise ValueError("generator exponents must be >= 1")
    from math import comb
    p1 = [Fraction(comb(ell1, k)) for k in range(ell1 + 1)]
    p2 = [Fraction(comb(ell2, k)) for k in range(ell2 + 1)]
    return polynomial_generators(p1, p2, order)


def polynomial_generators(
    p1_coeffs: Sequence, p2_coeffs: Sequence, order: int
) -> Tuple[VertexAutomorphism, VertexAutomorphism]:
    """General polynomial-attached generators on the two axes."""
    for coeffs in (p1_coeffs, p2_coeffs):
        if not coeffs or Fraction(coeffs[0]) != 1:
            raise ValueError("generator polynomial must have constant term 1")
    s_wall = _poly_wall(Direction(1, 0), p1_coeffs, order)
    t_wall = _poly_wall(Direction(0, 1), p2_coeffs, order)
    return wall_to_automorphism(s_wall, order), wall_to_automorphism(t_wall, order)


def symplectic_check(w: Wall, order: int) -> bool:
    """True iff a * y * df/dy == b * x * df/dx for the wall function f(x^a y^b)."""
    a, b = w.direction.a, w.direction.b
    f = w.function.to_series(a, b, order)
    lhs = f.y_deriv_y().scale(a)
    rhs = f.x_deriv_x().scale(b)
    return lhs == rhs


def ordered_product(walls: List[Wall], order: int) -> VertexAutomorphism:
    """Compose wall automorphisms with the largest slope leftmost (outermost)."""
    ordered = sorted(walls, key=lambda w: w.direction.slope_key(), reverse=True)
    result = VertexAutomorphism.identity(order)
    for w in ordered:
        result = result.compose(wall_to_automorphism(w, order))
    return result
