"""Quantities extracted from wall functions.

* Log-coefficients c^k of a wall function, the partition-summed rational curve
  counts: log f = sum_k k c^k z^k.
* Euler-characteristic series of back/front framed quiver moduli, read off as
  the a/m-th and b/m-th roots of the wall function (valid when both generator
  exponents equal m).
* The closed-form slope-1 series (Fuss-Catalan powers) and its defining
  algebraic relation.
* The Euler form of the m-Kronecker quiver and the resulting existence
  predicate for semistable representations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, gcd
from typing import Dict, Tuple

from .series import UniSeries
from .vertexgroup import Direction

__all__ = [
    "Framing",
    "GWCoefficients",
    "EulerSeries",
    "gw_coefficients",
    "euler_series",
    "slope_one_series",
    "s_r_algebraic_check",
    "euler_form",
    "semistable_exists",
]


class Framing(Enum):
    BACK = "back"
    FRONT = "front"


@dataclass(frozen=True)
class GWCoefficients:
    """The coefficients c^k on a ray, defined by log f = sum_k k c^k z^k."""

    direction: Direction
    values: Dict[int, Fraction] = field(compare=False)

    def __getitem__(self, k: int) -> Fraction:
        return self.values.get(k, Fraction(0))


@dataclass(frozen=True)
class EulerSeries:
    """Euler characteristics chi(k) extracted from a wall function root.

    Integrality is reported per coefficient, never assumed.
    """

    direction: Direction
    framing: Framing
    m: int
    chi: Dict[int, Fraction] = field(compare=False)

    def __getitem__(self, k: int) -> Fraction:
        return self.chi.get(k, Fraction(0))

    def integral(self, k: int) -> bool:
        return self[k].denominator == 1

    def all_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.chi.values())


def gw_coefficients(f: UniSeries, a: int, b: int) -> GWCoefficients:
    """c^k = [z^k] log(f) / k."""
    if f.constant_term != 1:
        raise ValueError("wall function must have constant term 1")
    logf = f.log_unit()
    values = {k: c / k for k, c in logf.coeffs.items()}
    return GWCoefficients(Direction(a, b), values)


def euler_series(f: UniSeries, a: int, b: int, m: int, framing: Framing) -> EulerSeries:
    """chi series with f = B^{m/a} = F^{m/b} inverted as B = f^{a/m}, F = f^{b/m}.

    Valid only when both generator exponents equal m.
    """
    if f.constant_term != 1:
        raise ValueError("wall function must have constant term 1")
    if m < 1:
        raise ValueError("m must be positive")
    exponent = Fraction(a, m) if framing is Framing.BACK else Fraction(b, m)
    root = f.pow_rational(exponent)
    chi = {k: c for k, c in root.coeffs.items() if k >= 1}
    return EulerSeries(Direction(a, b), framing, m, chi)


def fuss_catalan_series(r: int, order: int) -> UniSeries:
    """S_r(z) = sum_k C(rk, k) / ((r-1)k + 1) z^k, satisfying z S^r - S + 1 = 0."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        # z*S^0 - S + 1 = 0 gives S = 1 + z directly
        return UniSeries(order, {0: Fraction(1), 1: Fraction(1)} if order >= 1 else {0: Fraction(1)})
    coeffs = {k: Fraction(comb(r * k, k), (r - 1) * k + 1) for k in range(order + 1)}
    return UniSeries(order, coeffs)


def slope_one_series(ell1: int, ell2: int, order: int) -> UniSeries:
    """The conjectured slope-1 wall function: the Fuss-Catalan series with
    parameter (ell1-1)(ell2-1), raised to the ell1*ell2 power."""
    if ell1 < 1 or ell2 < 1:
        raise ValueError("generator exponents must be >= 1")
    inner = fuss_catalan_series((ell1 - 1) * (ell2 - 1), order)
    return inner.pow_int(ell1 * ell2)


def s_r_algebraic_check(r: int, order: int) -> bool:
    """Verify z * S_r^r - S_r + 1 = 0 exactly at the given truncation."""
    if r < 1:
        raise ValueError("r must be >= 1")
    S = fuss_catalan_series(r, order)
    z = UniSeries(order, {1: Fraction(1)})
    residual = z * S.pow_int(r) - S + UniSeries.one(order)
    return not residual.coeffs


def euler_form(d: Tuple[int, int], e: Tuple[int, int], m: int) -> int:
    """The homological pairing <d,e> = d1 e1 + d2 e2 - m d1 e2 for Q_m."""
    d1, d2 = d
    e1, e2 = e
    return d1 * e1 + d2 * e2 - m * d1 * e2


def semistable_exists(d: Tuple[int, int], m: int) -> bool:
    """Existence of a semistable representation with dimension vector
    proportional to the primitive vector d: true iff <d,d> <= 1."""
    d1, d2 = d
    if d1 < 0 or d2 < 0 or (d1, d2) == (0, 0):
        raise ValueError("dimension vector must be nonzero and non-negative")
    if gcd(d1, d2) != 1:
        raise ValueError("dimension vector must be primitive")
    return euler_form(d, d, m) <= 1
