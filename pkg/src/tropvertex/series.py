"""Exact sparse arithmetic for truncated formal power series over Q.

Two representations are used throughout the package:

* ``Series``: bivariate series in x, y truncated at a fixed total degree N,
  stored as a sparse map (i, j) -> Fraction.  The deformation parameter t is
  absorbed into the grading: every function handled here is a series in
  (tx)^a (ty)^b, so the t-order of a term always equals its total (x,y)
  degree.
* ``UniSeries``: univariate series in z truncated at order K, used for
  wall functions f(z) with z = x^a y^b.

All coefficients are exact rationals; no tolerances appear anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

Exponent = Tuple[int, int]

__all__ = ["Series", "UniSeries", "rational_binomial"]


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def rational_binomial(q: Fraction, j: int) -> Fraction:
    """Generalized binomial coefficient C(q, j) = q(q-1)...(q-j+1)/j!."""
    q = _frac(q)
    num = Fraction(1)
    for i in range(j):
        num *= q - i
        num /= i + 1
    return num


class Series:
    """Bivariate power series over Q truncated at total degree ``order``.

    Instances are immutable by convention: every operation returns a new
    object and never mutates its inputs, so values can be shared freely.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: Mapping[Exponent, Fraction] | None = None):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent ({i},{j}) not supported")
                if i + j > order:
                    continue
                c = _frac(c)
                if c != 0:
                    clean[(i, j)] = c
        self.order = order
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls(order, {(0, 0): Fraction(1)})

    @classmethod
    def monomial(cls, i: int, j: int, coeff, order: int) -> "Series":
        return cls(order, {(i, j): _frac(coeff)})

    # -- basics -------------------------------------------------------

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coeff(0, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend truncation order")
        return Series(order, {e: c for e, c in self.terms.items() if e[0] + e[1] <= order})

    def _check_compatible(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError(
                f"mismatched truncation orders {self.order} != {other.order}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Series(N={self.order}, {self.format()})"

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda e: (e[0] + e[1], e[1])):
            c = self.terms[(i, j)]
            mono = "".join(
                s for s in (
                    f"x^{i}" if i > 1 else ("x" if i == 1 else ""),
                    f"y^{j}" if j > 1 else ("y" if j == 1 else ""),
                ) if s)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        self._check_compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Series(self.order, terms)

    def __neg__(self) -> "Series":
        return Series(self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: "Series") -> "Series":
        self._check_compatible(other)
        N = self.order
        terms: Dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                i, j = i1 + i2, j1 + j2
                if i + j > N:
                    continue
                e = (i, j)
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Series(N, terms)

    def scale(self, c) -> "Series":
        c = _frac(c)
        return Series(self.order, {e: c * v for e, v in self.terms.items()})

    def invert_unit(self) -> "Series":
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.constant_term
        if c0 == 0:
            raise ValueError("series with zero constant term is not invertible")
        # r = (1/c0) * sum_k (-u/c0)^k  with  self = c0 (1 + u/c0)
        u = Series(self.order, {e: c for e, c in self.terms.items() if e != (0, 0)})
        w = u.scale(-1 / c0)
        result = Series.one(self.order)
        power = Series.one(self.order)
        for _ in range(self.order):
            power = power * w
            if power.is_zero():
                break
            result = result + power
        return result.scale(1 / c0)

    def pow_int(self, n: int) -> "Series":
        if n < 0:
            return self.invert_unit().pow_int(-n)
        result = Series.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def pow_rational(self, q) -> "Series":
        """Binomial series (1+u)^q for exact rational q; constant term must be 1."""
        q = _frac(q)
        if self.constant_term != 1:
            raise ValueError("pow_rational requires constant term 1")
        if q.denominator == 1:
            return self.pow_int(q.numerator)
        u = Series(self.order, {e: c for e, c in self.terms.items() if e != (0, 0)})
        result = Series.one(self.order)
        power = Series.one(self.order)
        for j in range(1, self.order + 1):
            power = power * u
            if power.is_zero():
                break
            result = result + power.scale(rational_binomial(q, j))
        return result

    def log_unit(self) -> "Series":
        """log(1+u); constant term must be 1."""
        if self.constant_term != 1:
            raise ValueError("log_unit requires constant term 1")
        u = Series(self.order, {e: c for e, c in self.terms.items() if e != (0, 0)})
        result = Series.zero(self.order)
        power = Series.one(self.order)
        for j in range(1, self.order + 1):
            power = power * u
            if power.is_zero():
                break
            sign = 1 if j % 2 == 1 else -1
            result = result + power.scale(Fraction(sign, j))
        return result

    def exp(self) -> "Series":
        """exp(u); constant term must be 0."""
        if self.constant_term != 0:
            raise ValueError("exp requires zero constant term")
        result = Series.one(self.order)
        power = Series.one(self.order)
        fact = 1
        for j in range(1, self.order + 1):
            power = power * self
            if power.is_zero():
                break
            fact *= j
            result = result + power.scale(Fraction(1, fact))
        return result

    def substitute(self, u: "Series", v: "Series") -> "Series":
        """Apply the ring map x -> x*u, y -> y*v; u and v must be units."""
        self._check_compatible(u)
        self._check_compatible(v)
        if u.constant_term == 0 or v.constant_term == 0:
            raise ValueError("substitution multipliers must be units")
        N = self.order
        max_i = max((i for (i, _) in self.terms), default=0)
        max_j = max((j for (_, j) in self.terms), default=0)
        u_pows = _power_table(u, max_i)
        v_pows = _power_table(v, max_j)
        result = Series.zero(N)
        for (i, j), c in self.terms.items():
            term = Series.monomial(i, j, c, N) * u_pows[i] * v_pows[j]
            result = result + term
        return result

    def x_deriv_x(self) -> "Series":
        """x * d/dx, acting as (i,j) -> i*(i,j)."""
        return Series(self.order, {(i, j): i * c for (i, j), c in self.terms.items()})

    def y_deriv_y(self) -> "Series":
        return Series(self.order, {(i, j): j * c for (i, j), c in self.terms.items()})

    def restrict_to_ray(self, a: int, b: int) -> "UniSeries":
        """Read off f(z) from a series supported on the ray (a,b), z = x^a y^b."""
        if a < 0 or b < 0 or (a == 0 and b == 0):
            raise ValueError("ray direction must be nonzero and non-negative")
        from math import gcd
        if gcd(a, b) != 1:
            raise ValueError(f"ray direction ({a},{b}) is not primitive")
        K = self.order // (a + b)
        coeffs: Dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            if a == 0:
                ok = i == 0 and j % b == 0
                k = j // b if ok else -1
            elif b == 0:
                ok = j == 0 and i % a == 0
                k = i // a if ok else -1
            else:
                ok = i % a == 0 and j % b == 0 and i // a == j // b
                k = i // a if ok else -1
            if not ok:
                raise ValueError(f"term x^{i} y^{j} lies off the ray ({a},{b})")
            coeffs[k] = c
        return UniSeries(K, coeffs)


def _power_table(s: Series, n: int) -> list:
    pows = [Series.one(s.order)]
    for _ in range(n):
        pows.append(pows[-1] * s)
    return pows


class UniSeries:
    """Univariate power series over Q truncated at order ``order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[int, Fraction] | Iterable | None = None):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        clean: Dict[int, Fraction] = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
            for k, c in items:
                if k < 0:
                    raise ValueError("negative exponents not supported")
                if k > order:
                    continue
                c = _frac(c)
                if c != 0:
                    clean[k] = c
        self.order = order
        self.coeffs = clean

    @classmethod
    def one(cls, order: int) -> "UniSeries":
        return cls(order, {0: Fraction(1)})

    @classmethod
    def geometric(cls, order: int) -> "UniSeries":
        """1/(1-z) truncated."""
        return cls(order, {k: Fraction(1) for k in range(order + 1)})

    def coeff(self, k: int) -> Fraction:
        return self.coeffs.get(k, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coeff(0)

    def truncate(self, order: int) -> "UniSeries":
        if order > self.order:
            raise ValueError("cannot extend truncation order")
        return UniSeries(order, {k: c for k, c in self.coeffs.items() if k <= order})

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"UniSeries(K={self.order}, {self.format()})"

    def format(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            if k == 0:
                parts.append(str(c))
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __add__(self, other: "UniSeries") -> "UniSeries":
        if self.order != other.order:
            raise ValueError("mismatched truncation orders")
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            coeffs[k] = coeffs.get(k, Fraction(0)) + c
        return UniSeries(self.order, coeffs)

    def __neg__(self) -> "UniSeries":
        return UniSeries(self.order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "UniSeries") -> "UniSeries":
        return self + (-other)

    def __mul__(self, other: "UniSeries") -> "UniSeries":
        if self.order != other.order:
            raise ValueError("mismatched truncation orders")
        coeffs: Dict[int, Fraction] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                if k > self.order:
                    continue
                coeffs[k] = coeffs.get(k, Fraction(0)) + c1 * c2
        return UniSeries(self.order, coeffs)

    def scale(self, c) -> "UniSeries":
        c = _frac(c)
        return UniSeries(self.order, {k: c * v for k, v in self.coeffs.items()})

    def pow_int(self, n: int) -> "UniSeries":
        if n < 0:
            return self.invert_unit().pow_int(-n)
        result = UniSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert_unit(self) -> "UniSeries":
        c0 = self.constant_term
        if c0 == 0:
            raise ValueError("series with zero constant term is not invertible")
        u = UniSeries(self.order, {k: c for k, c in self.coeffs.items() if k != 0})
        w = u.scale(-1 / c0)
        result = UniSeries.one(self.order)
        power = UniSeries.one(self.order)
        for _ in range(self.order):
            power = power * w
            if not power.coeffs:
                break
            result = result + power
        return result.scale(1 / c0)

    def pow_rational(self, q) -> "UniSeries":
        q = _frac(q)
        if self.constant_term != 1:
            raise ValueError("pow_rational requires constant term 1")
        if q.denominator == 1:
            return self.pow_int(q.numerator)
        u = UniSeries(self.order, {k: c for k, c in self.coeffs.items() if k != 0})
        result = UniSeries.one(self.order)
        power = UniSeries.one(self.order)
        for j in range(1, self.order + 1):
            power = power * u
            if not power.coeffs:
                break
            result = result + power.scale(rational_binomial(q, j))
        return result

    def log_unit(self) -> "UniSeries":
        if self.constant_term != 1:
            raise ValueError("log_unit requires constant term 1")
        u = UniSeries(self.order, {k: c for k, c in self.coeffs.items() if k != 0})
        result = UniSeries(self.order)
        power = UniSeries.one(self.order)
        for j in range(1, self.order + 1):
            power = power * u
            if not power.coeffs:
                break
            sign = 1 if j % 2 == 1 else -1
            result = result + power.scale(Fraction(sign, j))
        return result

    def to_series(self, a: int, b: int, order: int) -> Series:
        """Expand f(z) with z = x^a y^b into a bivariate series at total degree ``order``."""
        terms: Dict[Exponent, Fraction] = {}
        for k, c in self.coeffs.items():
            i, j = a * k, b * k
            if i + j <= order:
                terms[(i, j)] = c
        return Series(order, terms)
