"""Built-in verification suite: named exact checks with per-check timing.

Every check either returns normally (pass) or raises CheckFailure with a
message pinpointing the first discrepancy.  All comparisons are exact
rational equality.  run_checks collects results; the CLI maps any failure to
exit code 1.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Dict, List, Optional

from .analysis import (
    Framing,
    euler_form,
    euler_series,
    gw_coefficients,
    semistable_exists,
    slope_one_series,
)
from .permissible import (
    Classification,
    R_eval,
    classify,
    discrete_series,
    permissibility_oracle,
    permissible_set,
    t1,
    t2,
    witness_k_bound,
)
from .scatter import ScatteringDiagram, commutator, factorize, verify_factorization
from .series import Series, UniSeries
from .vertexgroup import (
    Direction,
    VertexAutomorphism,
    generators,
    polynomial_generators,
    symplectic_check,
)

__all__ = ["CheckFailure", "CheckResult", "CHECKS", "run_checks"]


class CheckFailure(AssertionError):
    pass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    seconds: float
    message: str = ""


_DIAGRAM_CACHE: Dict[tuple, ScatteringDiagram] = {}


def _diagram(ell1: int, ell2: int, order: int) -> ScatteringDiagram:
    key = (ell1, ell2, order)
    if key not in _DIAGRAM_CACHE:
        S, T = generators(ell1, ell2, order)
        _DIAGRAM_CACHE[key] = factorize(commutator(S, T))
    return _DIAGRAM_CACHE[key]


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailure(message)


def check_single_wall() -> None:
    """l1 = l2 = 1 at N = 8 factors as the single wall (1,1) with f = 1+z."""
    t0 = time.perf_counter()
    d = _diagram(1, 1, 8)
    elapsed = time.perf_counter() - t0
    _require(d.directions() == [Direction(1, 1)], f"walls {d.directions()} != [(1,1)]")
    f = d.wall_function(1, 1)
    _require(f == UniSeries(4, {0: Fraction(1), 1: Fraction(1)}), f"f_(1,1) = {f.format()} != 1 + z")
    _require(elapsed < 1.0, f"factorization took {elapsed:.2f}s >= 1s")


def check_two_two_diagram() -> None:
    """l1 = l2 = 2 at N = 12: f_(1,1) = 1/(1-z)^4, f on (k,k+1) and (k+1,k) is
    (1+z)^2, and no other walls."""
    d = _diagram(2, 2, 12)
    expected_dirs = {Direction(1, 1)}
    for k in range(1, 6):
        expected_dirs |= {Direction(k, k + 1), Direction(k + 1, k)}
    _require(set(d.directions()) == expected_dirs,
             f"wall set {sorted(map(str, d.directions()))} unexpected")
    center = UniSeries.geometric(6).pow_int(4)
    _require(d.wall_function(1, 1) == center,
             f"f_(1,1) = {d.wall_function(1, 1).format()} != 1/(1-z)^4")
    for k in range(1, 6):
        for (a, b) in ((k, k + 1), (k + 1, k)):
            K = 12 // (a + b)
            sq = UniSeries(K, {0: Fraction(1), 1: Fraction(2), 2: Fraction(1)})
            _require(d.wall_function(a, b) == sq,
                     f"f_({a},{b}) = {d.wall_function(a, b).format()} != (1+z)^2")


def check_three_three_slope_one() -> None:
    """l1 = l2 = 3 at N = 10: f_(1,1) equals the Fuss-Catalan ninth power to
    z-order 5; discrete walls (3,1),(1,3) carry (1+z)^3."""
    d = _diagram(3, 3, 10)
    _require(d.wall_function(1, 1) == slope_one_series(3, 3, 5),
             "f_(1,1) disagrees with the slope-1 closed form")
    cube = UniSeries(2, {0: Fraction(1), 1: Fraction(3), 2: Fraction(3)})
    for (a, b) in ((3, 1), (1, 3)):
        _require(d.wall_function(a, b) == cube,
                 f"f_({a},{b}) = {d.wall_function(a, b).format()} != (1+z)^3 truncated")


def check_two_three_log_coefficients() -> None:
    """(l1,l2) = (2,3) at N = 10: c^1, c^2, c^3 at (1,1) are 6, 9/2, 20/3 and
    f_(1,1) matches the Catalan sixth power."""
    d = _diagram(2, 3, 10)
    f = d.wall_function(1, 1)
    c = gw_coefficients(f, 1, 1)
    expected = {1: Fraction(6), 2: Fraction(9, 2), 3: Fraction(20, 3)}
    for k, v in expected.items():
        _require(c[k] == v, f"c^{k} = {c[k]} != {v}")
    _require(f == slope_one_series(2, 3, 5),
             "f_(1,1) disagrees with the Catalan sixth power")


def check_quiver_extraction() -> None:
    """m = 2: chi_B(k) = k+1 on the (1,1) wall for k <= 5; B = 1+z and
    F = (1+z)^2 on (1,2); every extracted chi integral for m <= 3, N <= 12."""
    d2 = _diagram(2, 2, 12)
    chiB = euler_series(d2.wall_function(1, 1), 1, 1, 2, Framing.BACK)
    for k in range(1, 6):
        _require(chiB[k] == k + 1, f"chi_B({k}) = {chiB[k]} != {k + 1}")
    B = euler_series(d2.wall_function(1, 2), 1, 2, 2, Framing.BACK)
    F = euler_series(d2.wall_function(1, 2), 1, 2, 2, Framing.FRONT)
    _require(B.chi == {1: Fraction(1)}, f"B_(1,2) chi = {B.chi} != {{1: 1}}")
    _require(F.chi == {1: Fraction(2), 2: Fraction(1)}, f"F_(1,2) chi = {F.chi}")
    for m, order in ((1, 12), (2, 12), (3, 12)):
        d = _diagram(m, m, order)
        for w in d.directions():
            for framing in Framing:
                s = euler_series(d.walls[w], w.a, w.b, m, framing)
                _require(s.all_integral(),
                         f"non-integral chi on wall {w} for m={m}, {framing.value}")


def check_classification_tables() -> None:
    """The five finite permissible sets match their tables; for (2,2), (3,3),
    (2,3) the classification over a+b <= 20 matches the known structure."""
    tables = {
        (1, 1): {(1, 1)},
        (1, 2): {(1, 2), (1, 1)},
        (2, 1): {(1, 1), (2, 1)},
        (1, 3): {(1, 3), (2, 3), (1, 1), (1, 2)},
        (3, 1): {(1, 1), (2, 1), (3, 1), (3, 2)},
    }
    for pair, expected in tables.items():
        got = {(d.a, d.b) for d, c in permissible_set(*pair, 20).items() if c.permissible}
        _require(got == expected, f"permissible set for {pair}: {sorted(got)} != {sorted(expected)}")

    # (2,2): exactly (1,1) on the cone boundary plus the two (k,k+-1) ladders
    for d, c in permissible_set(2, 2, 20).items():
        a, b = d.a, d.b
        if (a, b) == (1, 1):
            expected_c = Classification.CONE_BOUNDARY
        elif b == a + 1:
            expected_c = Classification.DISCRETE_A if a % 2 else Classification.DISCRETE_B
        elif a == b + 1:
            expected_c = Classification.DISCRETE_B if b % 2 else Classification.DISCRETE_A
        else:
            expected_c = Classification.NOT_PERMISSIBLE
        _require(c is expected_c, f"(2,2) classification at ({a},{b}): {c} != {expected_c}")

    # (3,3) and (2,3): discrete classifications occur exactly on the orbit
    # lists, and everything else is permissible iff the quadratic is <= 0
    for pair in ((3, 3), (2, 3)):
        A, B = discrete_series(*pair, 20)
        for d, c in permissible_set(*pair, 20).items():
            if d in A:
                _require(c is Classification.DISCRETE_A, f"{pair} at {d}: {c} != discrete-a")
            elif d in B:
                _require(c is Classification.DISCRETE_B, f"{pair} at {d}: {c} != discrete-b")
            else:
                q = R_eval(*pair, d.a, d.b)
                _require(c.permissible == (q <= 0), f"{pair} at {d}: {c} vs q = {q}")
    A33, B33 = discrete_series(3, 3, 20)
    _require(Direction(1, 3) in A33 and Direction(8, 3) in A33, "(3,3) orbit missing (1,3)/(8,3)")
    _require(Direction(3, 1) in B33 and Direction(3, 8) in B33, "(3,3) orbit missing (3,1)/(3,8)")


def check_oracle_cross_validation() -> None:
    """The brute-force genus-inequality oracle agrees with classify on every
    primitive interior vector with a+b <= 20 for seven generator pairs."""
    t0 = time.perf_counter()
    pairs = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2), (3, 3), (2, 3), (1, 4)]
    for pair in pairs:
        for a in range(1, 20):
            for b in range(1, 21 - a):
                if gcd(a, b) != 1:
                    continue
                cls = classify(*pair, a, b)
                witness = permissibility_oracle(*pair, a, b, witness_k_bound(*pair, a, b))
                _require((witness is not None) == cls.permissible,
                         f"oracle/classify disagree for {pair} at ({a},{b}): "
                         f"{witness} vs {cls}")
    elapsed = time.perf_counter() - t0
    _require(elapsed < 120.0, f"oracle sweep took {elapsed:.1f}s >= 120s")


def _reflection_overlap(d: ScatteringDiagram, ell1: int, ell2: int) -> None:
    for w in d.directions():
        for image in (t1(ell1, w.a, w.b), t2(ell2, w.a, w.b)):
            ia, ib = image
            if ia <= 0 or ib <= 0 or ia + ib > d.order:
                continue
            K = min(d.order // (w.a + w.b), d.order // (ia + ib))
            f = d.wall_function(w.a, w.b).truncate(K)
            g = d.wall_function(ia, ib).truncate(K)
            if f != g:
                raise CheckFailure(
                    f"f_({w.a},{w.b}) = {f.format()} but f_({ia},{ib}) = {g.format()} "
                    f"on overlap order {K}")


def check_symmetry() -> None:
    """Wall functions are invariant under the reflections t1, t2 wherever both
    rays are within degree reach, for (2,2) and (3,3) at N = 12."""
    _reflection_overlap(_diagram(2, 2, 12), 2, 2)
    _reflection_overlap(_diagram(3, 3, 12), 3, 3)


def check_reversed_polynomial_symmetry() -> None:
    """For degree-2 generator polynomials (which equal their own coefficient
    reversals), the diagram satisfies f_(a,b) = f_(t1(a,b)) on overlaps."""
    p2 = [Fraction(1), Fraction(2), Fraction(1)]
    for p1 in ([Fraction(1), Fraction(2), Fraction(1)], [Fraction(1), Fraction(3), Fraction(1)]):
        S, T = polynomial_generators(p1, p2, 10)
        d = factorize(commutator(S, T), label=f"p1={p1}")
        _reflection_overlap(d, 2, 2)


def check_property_suites() -> None:
    """Seeded randomized suites, >= 200 cases each: series ring axioms, group
    laws, factorization round trips, truncation coherence, per-wall symplectic
    identity, the quadratic-form / Euler-form identity, and the equivalence of
    semistable existence with permissibility for m <= 4."""
    rng = random.Random(20260825)

    def rand_series(order: int, nterms: int = 5) -> Series:
        terms = {}
        for _ in range(nterms):
            i, j = rng.randint(0, order), rng.randint(0, order)
            if i + j <= order:
                terms[(i, j)] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        return Series(order, terms)

    for _ in range(200):
        N = rng.randint(2, 6)
        A, B, C = rand_series(N), rand_series(N), rand_series(N)
        _require(A + B == B + A and A * B == B * A, "ring commutativity failed")
        _require((A + B) + C == A + (B + C), "additive associativity failed")
        _require((A * B) * C == A * (B * C), "multiplicative associativity failed")
        _require(A * (B + C) == A * B + A * C, "distributivity failed")

    def rand_unit(order: int) -> Series:
        s = rand_series(order, 3)
        return Series.one(order) + s - Series(order, {(0, 0): s.constant_term})

    for _ in range(200):
        N = rng.randint(2, 5)
        f = VertexAutomorphism(rand_unit(N), rand_unit(N))
        g = VertexAutomorphism(rand_unit(N), rand_unit(N))
        h = VertexAutomorphism(rand_unit(N), rand_unit(N))
        _require(f.compose(g).compose(h) == f.compose(g.compose(h)),
                 "composition associativity failed")
        _require(f.compose(f.invert()).is_identity() and f.invert().compose(f).is_identity(),
                 "inverse law failed")

    for _ in range(200):
        N = rng.randint(4, 6)
        deg1, deg2 = rng.randint(1, 2), rng.randint(1, 2)
        p1 = [Fraction(1)] + [Fraction(rng.randint(1, 3)) for _ in range(deg1)]
        p2 = [Fraction(1)] + [Fraction(rng.randint(1, 3)) for _ in range(deg2)]
        S, T = polynomial_generators(p1, p2, N)
        C = commutator(S, T)
        d = factorize(C)
        _require(verify_factorization(d, C), "factorization round trip failed")
        for w in d.ordered_walls():
            _require(symplectic_check(w, N), f"symplectic identity failed on {w.direction}")
        dt = d.truncate(N - 1)
        St, Tt = polynomial_generators(p1, p2, N - 1)
        _require(dt == factorize(commutator(St, Tt)), "truncation coherence failed")

    count = 0
    for m in range(1, 5):
        for a in range(1, 20):
            for b in range(1, 21 - a):
                if gcd(a, b) != 1:
                    continue
                count += 1
                q = R_eval(m, m, a, b)
                _require(m * q == euler_form((a, b), (a, b), m),
                         f"quadratic/Euler-form identity failed at m={m}, ({a},{b})")
                _require(semistable_exists((a, b), m) == classify(m, m, a, b).permissible,
                         f"semistable/permissible equivalence failed at m={m}, ({a},{b})")
    _require(count >= 200, "quadratic-form sweep too small")


CHECKS: Dict[str, Callable[[], None]] = {
    "single-wall": check_single_wall,
    "two-two-diagram": check_two_two_diagram,
    "three-three-slope-one": check_three_three_slope_one,
    "two-three-log-coefficients": check_two_three_log_coefficients,
    "quiver-extraction": check_quiver_extraction,
    "classification-tables": check_classification_tables,
    "oracle-cross-validation": check_oracle_cross_validation,
    "symmetry": check_symmetry,
    "reversed-polynomial-symmetry": check_reversed_polynomial_symmetry,
    "property-suites": check_property_suites,
}


def run_checks(name_filter: Optional[str] = None) -> List[CheckResult]:
    results = []
    for name, fn in CHECKS.items():
        if name_filter is not None and name_filter not in name:
            continue
        t0 = time.perf_counter()
        try:
            fn()
            results.append(CheckResult(name, True, time.perf_counter() - t0))
        except CheckFailure as exc:
            results.append(CheckResult(name, False, time.perf_counter() - t0, str(exc)))
    return results
