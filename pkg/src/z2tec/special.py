"""Generalized Poisson distributions, published criteria and worked examples.

Poisson parameters are taken in exponentiated form so that every mass stays
rational: a spectral mass ``rho`` at ``x_i`` enters as ``u_i = exp(-2 rho)``,
and ``q = exp(-lambda)`` for the Haar spectral measure ``lambda * m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import group
from .measure import Measure, a_max, parse_rational, support
from .oracle import is_tec_bruteforce

ONE = Fraction(1)


def _fraction(x) -> Fraction:
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def poisson_measure(u: Sequence, l: int = 3) -> Measure:
    """Generalized Poisson distribution with ``exp(-2 rho({x_i})) = u[i - 1]``.

    The characteristic function at ``y`` is the product of ``u_i`` over the
    nonzero ``x_i`` on which ``y`` takes the value -1.
    """
    n = group.order(l)
    u = [_fraction(x) for x in u]
    if len(u) != n - 1:
        raise ValueError(f"expected {n - 1} parameters, got {len(u)}")
    if any(not 0 < x <= 1 for x in u):
        raise ValueError("each parameter must lie in (0, 1]")
    table = group.character_table(l)
    values = []
    for y in range(n):
        v = ONE
        for i in range(1, n):
            if table[i][y] == -1:
                v *= u[i - 1]
        values.append(v)
    masses = group.walsh_inverse(values)
    if any(m < 0 for m in masses):
        raise ArithmeticError(f"negative mass from parameters {u}")
    return Measure.from_masses(masses)


def poisson_haar(q) -> Measure:
    """Spectral measure proportional to Haar measure on Z_2^3, ``q = exp(-lambda)``."""
    q = _fraction(q)
    if not 0 < q <= 1:
        raise ValueError("q must lie in (0, 1]")
    return Measure.from_masses([(1 + 7 * q) / 8] + [(1 - q) / 8] * 7)


def theorem1_check(q) -> bool:
    q = _fraction(q)
    if not 0 < q < 1:
        raise ValueError("q must lie in (0, 1)")
    return q > Fraction(1, 3)


def _theorem2_system(p: Fraction, q: Fraction, r: Fraction) -> bool:
    return (
        p + q + p * q > 1
        and q + r + q * r > 1
        and p - q + r + p * q + q * r - r * p + p * q * r > 1
    )


def theorem2_check(p, q, r) -> bool:
    """Criterion for three-generator Poisson measures, ``p = exp(-2a)`` etc."""
    p, q, r = (_fraction(x) for x in (p, q, r))
    if any(not 0 < x < 1 for x in (p, q, r)):
        raise ValueError("p, q, r must lie in (0, 1)")
    return (
        _theorem2_system(p, q, r)
        or _theorem2_system(q, r, p)
        or _theorem2_system(r, p, q)
    )


def theorem2_measure(p, q, r) -> Measure:
    """Poisson measure with spectral mass on the generators ``x1, x2, x3``."""
    return poisson_measure((p, q, r, 1, 1, 1, 1))


def _require_l2(mu: Measure) -> None:
    if mu.l != 2:
        raise ValueError("expected a measure on Z_2^2")


def theorem3_check(mu: Measure) -> bool:
    _require_l2(mu)
    size = len(support(mu))
    top = a_max(mu)
    half = Fraction(1, 2)
    if size <= 2:
        return True
    if size == 3:
        return top >= half
    if top > half:
        return True
    if top == half:
        return False
    a, b, c, d = mu.weights
    return a + b == c + d or a + c == b + d or a + d == b + c


def is_tec_bruteforce_z22(mu: Measure) -> bool:
    _require_l2(mu)
    return is_tec_bruteforce(mu).tec


# -- worked examples -----------------------------------------------------------

@dataclass(frozen=True)
class ParamRange:
    """Union of intervals; each is ``(lo, hi, lo_closed, hi_closed)``."""

    intervals: tuple[tuple[Fraction, Fraction, bool, bool], ...]

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        for lo, hi, lc, hc in self.intervals:
            if (lo < x or (lc and x == lo)) and (x < hi or (hc and x == hi)):
                return True
        return False

    def __str__(self) -> str:
        parts = []
        for lo, hi, lc, hc in self.intervals:
            parts.append(f"{'[' if lc else '('}{lo}, {hi}{']' if hc else ')'}")
        return " U ".join(parts)

    def samples(self, count: int) -> list[Fraction]:
        """``count`` evenly spread points, closed endpoints included."""
        pts = []
        per = max(2, -(-count // len(self.intervals)))
        for lo, hi, lc, hc in self.intervals:
            steps = per + 1
            for k in range(0 if lc else 1, steps + (1 if hc else 0)):
                pts.append(lo + (hi - lo) * k / steps)
        return sorted(set(x for x in pts if x in self))


def _r(lo, hi, lc, hc) -> tuple:
    return (Fraction(lo), Fraction(hi), lc, hc)


_F = Fraction


def _example1(e):
    return [_F(1, 8) + 4 * e, _F(1, 8) - 4 * e, _F(1, 8) - 3 * e, _F(1, 8) - 2 * e,
            _F(1, 8) + 3 * e, _F(1, 8) + 2 * e, _F(1, 8) + e, _F(1, 8) - e]


def _example2(e):
    q = _F(1, 4)
    return [q - e, e, 2 * e, q - e, q - 2 * e, e, 2 * e, q - 2 * e]


def _example3(e):
    q = _F(1, 4)
    return [q - e, e, 2 * e, 2 * e, q - 2 * e, q - 2 * e, 2 * e, q - 2 * e]


def _example4(e):
    return [_F(5, 6) + e] + [(_F(1, 6) - e) / 7] * 7


def _example5(e):
    big, small = _F(2, 24) - e, _F(1, 24) - e
    return [_F(8, 24) + 3 * e, _F(7, 24) + 3 * e, big, big, small, small, big, small]


def _example6(e):
    lo, hi = _F(1, 8) - e, _F(1, 8) + e
    return [_F(1, 4) + e, lo, hi, hi, lo, lo, e, lo]


def _example7(e):
    t = e / 3
    return [_F(1, 2) - e, _F(1, 8), t, t, _F(1, 8), _F(1, 8), t, _F(1, 8)]


def _example8(e):
    return [_F(1, 4) + e] + [(_F(3, 4) - e) / 7] * 7


def _example9(e):
    return [_F(1, 4) - e] + [(_F(3, 4) + e) / 7] * 7


EXAMPLES: dict[int, tuple[Callable, ParamRange]] = {
    1: (_example1, ParamRange((_r(0, _F(1, 32), True, True),))),
    2: (_example2, ParamRange((_r(0, _F(1, 8), False, False),))),
    3: (_example3, ParamRange((_r(0, _F(1, 28), False, False),))),
    4: (_example4, ParamRange((_r(0, _F(1, 6), False, True),))),
    5: (_example5, ParamRange((_r(0, _F(1, 24), True, True),))),
    6: (_example6, ParamRange((_r(_F(1, 16), _F(1, 8), False, False),))),
    7: (_example7, ParamRange((_r(0, _F(3, 16), False, False),))),
    8: (_example8, ParamRange((_r(0, _F(1, 20), False, True),))),
    9: (_example9, ParamRange((_r(0, _F(1, 8), True, False), _r(_F(1, 8), _F(1, 4), False, True)))),
}

# Branch each TEC example was built to satisfy (with X1 = {x0, x1}, X2 = K1).
EXAMPLE_BRANCH = {1: "I.2(a)", 2: "I.2(b)", 3: "I.2(c)", 4: "II.1", 5: "II.2", 6: "II.3", 7: "II.4"}


def example_range(n: int) -> ParamRange:
    if n not in EXAMPLES:
        raise ValueError(f"example number must be in 1..9, got {n}")
    return EXAMPLES[n][1]


def example_measure(n: int, eps) -> Measure:
    """Mass vector of worked example ``n`` at parameter ``eps``.

    Example 4 is defined only by the regime ``a_max > 5/6``; it is realised as
    ``a0 = 5/6 + eps`` with the remainder spread evenly.
    """
    build, rng = EXAMPLES.get(n, (None, None))
    if build is None:
        raise ValueError(f"example number must be in 1..9, got {n}")
    eps = _fraction(eps)
    if eps not in rng:
        raise ValueError(f"eps={eps} outside the range {rng} of example {n}")
    return Measure.from_masses(build(eps))
