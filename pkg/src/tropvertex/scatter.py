"""Ordered-product factorization of commutators into walls.

Given the commutator C = T^{-1} o S o T o S^{-1} of two axis generators, the
factorization engine computes the unique ordered product of interior walls
equal to C modulo total degree N+1.  The scheme is inductive in the total
degree k: the walls known so far reproduce C up to degree k-1; the degree-k
part of the residual P^{-1} o C decomposes as a sum of first-order wall
actions, one monomial per ray multiple, which determines the degree-k
increments of the wall functions.  The x- and y-residuals give the same
increment (a consequence of the symplectic condition) and this is asserted at
every step; the final diagram is checked to reproduce C exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional

from .series import Series, UniSeries
from .vertexgroup import (
    Direction,
    VertexAutomorphism,
    Wall,
    wall_to_automorphism,
)

__all__ = ["ScatteringDiagram", "commutator", "factorize", "verify_factorization"]


class FactorizationError(ArithmeticError):
    """The residual is not of the required log-derivation form."""


class ScatteringDiagram:
    """Walls of a commutator factorization, iterated in decreasing slope order."""

    def __init__(self, order: int, walls: Dict[Direction, UniSeries], label: str = ""):
        for d, f in walls.items():
            if not d.is_interior():
                raise ValueError(f"wall direction {d} is not strictly interior")
            if f.constant_term != 1:
                raise ValueError(f"wall function at {d} must have constant term 1")
        self.order = order
        self.label = label
        self.walls = dict(
            sorted(walls.items(), key=lambda kv: kv[0].slope_key(), reverse=True))

    def directions(self) -> List[Direction]:
        return list(self.walls)

    def ordered_walls(self) -> List[Wall]:
        return [Wall(d, f) for d, f in self.walls.items()]

    def wall_function(self, a: int, b: int) -> UniSeries:
        """f(z) on the ray (a,b), truncated at floor(N/(a+b)); 1 if no wall stored."""
        d = Direction(a, b)
        if not d.is_interior():
            raise ValueError("wall query must be strictly interior")
        K = self.order // (a + b)
        f = self.walls.get(d)
        if f is None:
            return UniSeries.one(K)
        return f if f.order == K else f.truncate(K)

    def to_automorphism(self) -> VertexAutomorphism:
        result = VertexAutomorphism.identity(self.order)
        for w in self.ordered_walls():
            result = result.compose(wall_to_automorphism(w, self.order))
        return result

    def truncate(self, order: int) -> "ScatteringDiagram":
        if order > self.order:
            raise ValueError("cannot extend truncation order")
        walls = {}
        for d, f in self.walls.items():
            g = f.truncate(order // (d.a + d.b))
            if g.coeffs != {0: Fraction(1)}:
                walls[d] = g
        return ScatteringDiagram(order, walls, self.label)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScatteringDiagram):
            return NotImplemented
        return self.order == other.order and self.walls == other.walls

    def __repr__(self) -> str:
        rows = ", ".join(f"{d}: {f.format()}" for d, f in self.walls.items())
        return f"ScatteringDiagram(N={self.order}, {{{rows}}})"


def commutator(S: VertexAutomorphism, T: VertexAutomorphism) -> VertexAutomorphism:
    """T^{-1} o S o T o S^{-1}."""
    if S.order != T.order:
        raise ValueError("mismatched truncation orders")
    return T.invert().compose(S).compose(T).compose(S.invert())


def factorize(C: VertexAutomorphism, order: Optional[int] = None, label: str = "") -> ScatteringDiagram:
    """Compute the unique slope-ordered wall factorization of C.

    C must lie in the completed group (multipliers with constant term 1) and be
    the identity modulo total degree 2, as every commutator of axis generators is.
    """
    N = C.order if order is None else order
    if N != C.order:
        raise ValueError("truncation order must match the commutator")
    _check_identity_below(C, 2)

    # wall coefficients accumulated as direction -> {k: coefficient of z^k}
    coeffs: Dict[Direction, Dict[int, Fraction]] = {}

    for degree in range(2, N + 1):
        partial = _build_diagram(N, coeffs, label)
        residual = partial.to_automorphism().invert().compose(C)
        _check_identity_below(residual, degree)
        eps_x = residual.u - Series.one(N)
        eps_y = residual.v - Series.one(N)
        for (i, j) in set(eps_x.terms) | set(eps_y.terms):
            if i + j != degree:
                continue
            if i == 0 or j == 0:
                raise FactorizationError(
                    f"residual term x^{i} y^{j} lies on a coordinate axis")
            g = gcd(i, j)
            a, b = i // g, j // g
            cx = eps_x.coeff(i, j)
            cy = eps_y.coeff(i, j)
            increment = -cx / b
            if cy != a * increment:
                raise FactorizationError(
                    f"inconsistent x/y residuals at x^{i} y^{j}: {cx} vs {cy}")
            d = Direction(a, b)
            coeffs.setdefault(d, {})[g] = coeffs.get(d, {}).get(g, Fraction(0)) + increment

    diagram = _build_diagram(N, coeffs, label)
    if not verify_factorization(diagram, C):
        raise FactorizationError("factorization failed the exact residual check")
    return diagram


def _build_diagram(N: int, coeffs: Dict[Direction, Dict[int, Fraction]], label: str) -> ScatteringDiagram:
    walls = {}
    for d, ck in coeffs.items():
        f = UniSeries(N // (d.a + d.b), {0: Fraction(1), **ck})
        if f.coeffs != {0: Fraction(1)}:
            walls[d] = f
    return ScatteringDiagram(N, walls, label)


def _check_identity_below(theta: VertexAutomorphism, degree: int) -> None:
    for s in (theta.u, theta.v):
        for (i, j), c in s.terms.items():
            if 0 < i + j < degree:
                raise FactorizationError(
                    f"automorphism deviates from identity at degree {i + j} < {degree}")


def verify_factorization(d: ScatteringDiagram, C: VertexAutomorphism) -> bool:
    """True iff the ordered wall composition equals C exactly at order N."""
    if d.order != C.order:
        raise ValueError("mismatched truncation orders")
    return d.to_automorphism() == C
