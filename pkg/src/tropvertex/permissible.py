"""Which rays can carry a nontrivial wall: cone, discrete series, and oracle.

The homogenized quadratic q(a,b) = b^2/ell2 - ab + a^2/ell1 governs
everything.  Rays with q < 0 form the open cone between the roots xi-, xi+
(irrational in all but three cases, so the sign of q is used throughout and
the roots are never approximated).  Rays with q > 0 can only be permissible
if they lie on one of two reflection orbits, decided here by an exact descent
to (1,0) or (0,1).  A brute-force oracle checks the genus inequality directly
with balanced partitions, which minimize the sum of squares.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Optional, Tuple

from .vertexgroup import Direction

__all__ = [
    "Classification",
    "QuadraticData",
    "OrderedPartitionPair",
    "quadratic_data",
    "R_eval",
    "t1",
    "t2",
    "reflection_r",
    "discrete_series",
    "classify",
    "permissible_set",
    "permissibility_oracle",
    "witness_k_bound",
    "genus_inequality_value",
]

# Pairs for which the reflection group is finite; orbits are tabulated.
SPECIAL_PAIRS = {(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)}

SPECIAL_A = {
    (1, 1): [(1, 1)],
    (1, 2): [(1, 2)],
    (2, 1): [(1, 1)],
    (1, 3): [(1, 3), (2, 3)],
    (3, 1): [(1, 1), (2, 1)],
}

SPECIAL_B = {
    (1, 1): [(1, 1)],
    (1, 2): [(1, 1)],
    (2, 1): [(2, 1)],
    (1, 3): [(1, 1), (1, 2)],
    (3, 1): [(3, 1), (3, 2)],
}


class Classification(Enum):
    DISCRETE_A = "discrete-a"
    DISCRETE_B = "discrete-b"
    CONE_INTERIOR = "cone-interior"
    CONE_BOUNDARY = "cone-boundary"
    NOT_PERMISSIBLE = "not-permissible"

    @property
    def permissible(self) -> bool:
        return self is not Classification.NOT_PERMISSIBLE


@dataclass(frozen=True)
class QuadraticData:
    """The quadratic z^2/ell2 - z + 1/ell1 attached to a generator pair."""

    ell1: int
    ell2: int
    discriminant: Fraction
    roots_rational: Optional[Tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class OrderedPartitionPair:
    """A witness for the genus inequality: partitions of a*k and b*k."""

    Pa: Tuple[int, ...]
    Pb: Tuple[int, ...]
    k: int


def quadratic_data(ell1: int, ell2: int) -> QuadraticData:
    disc = 1 - Fraction(4, ell1 * ell2)
    roots = None
    if disc == 0:
        # only (2,2), (1,4), (4,1); any other perfect-square case is impossible
        xi = Fraction(ell2, 2)
        roots = (xi, xi)
    return QuadraticData(ell1, ell2, disc, roots)


def R_eval(ell1: int, ell2: int, a: int, b: int) -> Fraction:
    """The homogenized quadratic a^2 R(b/a) = b^2/ell2 - ab + a^2/ell1."""
    return Fraction(b * b, ell2) - a * b + Fraction(a * a, ell1)


def t1(ell1: int, a: int, b: int) -> Tuple[int, int]:
    return (ell1 * b - a, b)


def t2(ell2: int, a: int, b: int) -> Tuple[int, int]:
    return (a, ell2 * a - b)


def reflection_r(m: int, a: int, b: int) -> Tuple[int, int]:
    """The quiver reflection on dimension vectors."""
    return (b, m * b - a)


def reflection_r_inv(m: int, a: int, b: int) -> Tuple[int, int]:
    return (m * a - b, a)


def discrete_series(
    ell1: int, ell2: int, degree_bound: int
) -> Tuple[List[Direction], List[Direction]]:
    """The reflection orbits of (1,0) and (0,1), truncated to a + b <= bound.

    The first list is the orbit of (1,0) under alternating t2, t1, ...; the
    second the orbit of (0,1) under t1, t2, ...  For the five finite-group
    pairs the tabulated sets are returned.
    """
    if (ell1, ell2) in SPECIAL_PAIRS:
        a_list = [Direction(*v) for v in SPECIAL_A[(ell1, ell2)]]
        b_list = [Direction(*v) for v in SPECIAL_B[(ell1, ell2)]]
    else:
        a_list = _orbit((1, 0), ell1, ell2, first="t2", bound=degree_bound)
        b_list = _orbit((0, 1), ell1, ell2, first="t1", bound=degree_bound)
    a_list = [d for d in a_list if d.a + d.b <= degree_bound]
    b_list = [d for d in b_list if d.a + d.b <= degree_bound]
    return a_list, b_list


def _orbit(start: Tuple[int, int], ell1: int, ell2: int, first: str, bound: int) -> List[Direction]:
    out: List[Direction] = []
    a, b = start
    use_t1 = first == "t1"
    while True:
        a, b = t1(ell1, a, b) if use_t1 else t2(ell2, a, b)
        use_t1 = not use_t1
        if a + b > bound:
            return out
        if a <= 0 or b <= 0:
            # can only happen for finite reflection groups, handled by tables
            return out
        out.append(Direction(a, b))


def classify(ell1: int, ell2: int, a: int, b: int) -> Classification:
    """Exact membership of a primitive interior vector in the permissible set."""
    d = Direction(a, b)
    if not d.is_interior():
        raise ValueError("classification requires a strictly interior vector")
    q = R_eval(ell1, ell2, a, b)
    if q < 0:
        return Classification.CONE_INTERIOR
    if q == 0:
        return Classification.CONE_BOUNDARY
    if (ell1, ell2) in SPECIAL_PAIRS:
        if (a, b) in SPECIAL_A[(ell1, ell2)]:
            return Classification.DISCRETE_A
        if (a, b) in SPECIAL_B[(ell1, ell2)]:
            return Classification.DISCRETE_B
        return Classification.NOT_PERMISSIBLE
    return _descend(ell1, ell2, a, b, q)


def _descend(ell1: int, ell2: int, a: int, b: int, q: Fraction) -> Classification:
    """Reflect toward the axes; membership iff the walk exits at (1,0) or (0,1).

    While above the cone (2b > ell2*a) apply t2, otherwise t1; each step
    strictly decreases the exited coordinate, so termination is guaranteed.
    The value q is invariant along the walk and is asserted at every step.
    """
    while a > 0 and b > 0:
        if 2 * b > ell2 * a:
            a, b = t2(ell2, a, b)
        else:
            a, b = t1(ell1, a, b)
        if R_eval(ell1, ell2, a, b) != q:
            raise AssertionError("reflection failed to preserve the quadratic")
    if (a, b) == (1, 0):
        return Classification.DISCRETE_A
    if (a, b) == (0, 1):
        return Classification.DISCRETE_B
    return Classification.NOT_PERMISSIBLE


def permissible_set(ell1: int, ell2: int, degree_bound: int) -> Dict[Direction, Classification]:
    """Classify every primitive interior vector with a + b <= degree_bound."""
    out: Dict[Direction, Classification] = {}
    for a in range(1, degree_bound):
        for b in range(1, degree_bound + 1 - a):
            if gcd(a, b) != 1:
                continue
            out[Direction(a, b)] = classify(ell1, ell2, a, b)
    return out


def _balanced_partition(total: int, parts: int) -> Tuple[int, ...]:
    """The length-``parts`` partition of ``total`` minimizing the sum of squares."""
    base, extra = divmod(total, parts)
    return tuple([base + 1] * extra + [base] * (parts - extra))


def genus_inequality_value(a: int, b: int, k: int, Pa, Pb) -> int:
    """ab k^2 - k - sum p_i^2 - sum p'_j^2 + 2; permissibility needs >= 0."""
    return a * b * k * k - k - sum(p * p for p in Pa) - sum(p * p for p in Pb) + 2


def permissibility_oracle(
    ell1: int, ell2: int, a: int, b: int, k_max: Optional[int] = None
) -> Optional[OrderedPartitionPair]:
    """Search for a genus-inequality witness by brute force over k.

    Only balanced partitions are tested: the inequality depends on the parts
    through the sum of squares alone, which balanced partitions minimize, so
    a witness exists iff the balanced one works.
    """
    d = Direction(a, b)
    if not d.is_interior():
        raise ValueError("oracle requires a strictly interior vector")
    if k_max is None:
        k_max = witness_k_bound(ell1, ell2, a, b) or 1
    for k in range(1, k_max + 1):
        Pa = _balanced_partition(a * k, ell1)
        Pb = _balanced_partition(b * k, ell2)
        if genus_inequality_value(a, b, k, Pa, Pb) >= 0:
            return OrderedPartitionPair(Pa, Pb, k)
    return None


def witness_k_bound(ell1: int, ell2: int, a: int, b: int) -> Optional[int]:
    """The k at which the oracle's search is guaranteed to have decided.

    Cone interior: the smallest multiple of lcm(ell1, ell2) making
    c k^2 - k + 2 >= 0, where c = -q > 0 is the balanced-partition margin.
    Cone boundary: k = 2 suffices.  Outside the cone only k = 1 can work.
    """
    q = R_eval(ell1, ell2, a, b)
    if q > 0:
        return 1
    if q == 0:
        return 2
    c = -q
    L = lcm(ell1, ell2)
    k = L
    while c * k * k - k + 2 < 0:
        k += L
    return k
