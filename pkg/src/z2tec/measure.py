"""Probability measures on Z_2^l with exact rational masses.

A :class:`Measure` keeps its masses as integer weights over a common
denominator.  Every predicate below is homogeneous in the masses, so it can be
decided on the integer weights without building ``Fraction`` objects.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import group

_RATIONAL = re.compile(r"^\s*(?:(\d+)\s*/\s*(\d+)|(\d+)(?:\.(\d*))?|\.(\d+))\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``, an integer, or a finite decimal into an exact ``Fraction``.

    Signs, exponents and infinities are rejected.
    """
    m = _RATIONAL.match(text)
    if not m:
        raise ValueError(f"not a nonnegative rational: {text!r}")
    num, den, whole, frac, bare_frac = m.groups()
    if num is not None:
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    if bare_frac is not None:
        return Fraction(int(bare_frac), 10 ** len(bare_frac))
    frac = frac or ""
    return Fraction(int(whole + frac), 10 ** len(frac))


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Measure:
    """Masses ``weights[i] / denom`` on the elements of Z_2^l.

    Weights are nonnegative, sum to ``denom`` and are stored in lowest terms,
    so two equal measures compare and hash equal.
    """

    weights: tuple[int, ...]
    denom: int

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        group.log2_size(len(w))
        if any(x < 0 for x in w):
            raise ValueError("masses must be nonnegative")
        if sum(w) != self.denom or self.denom <= 0:
            raise ValueError(
                f"masses must sum to 1 (got {format_rational(Fraction(sum(w), max(self.denom, 1)))})"
            )
        g = math.gcd(*w)
        object.__setattr__(self, "weights", tuple(x // g for x in w))
        object.__setattr__(self, "denom", self.denom // g)

    @classmethod
    def from_masses(cls, masses: Iterable) -> Measure:
        fr = [parse_rational(m) if isinstance(m, str) else Fraction(m) for m in masses]
        if any(f < 0 for f in fr):
            raise ValueError("masses must be nonnegative")
        total = sum(fr, Fraction(0))
        if total != 1:
            raise ValueError(f"masses must sum to exactly 1, got {format_rational(total)}")
        d = math.lcm(*(f.denominator for f in fr))
        return cls(tuple(f.numerator * (d // f.denominator) for f in fr), d)

    @classmethod
    def from_weights(cls, weights: Sequence[int]) -> Measure:
        """Masses proportional to nonnegative integer ``weights``."""
        return cls(tuple(weights), sum(weights))

    @classmethod
    def haar(cls, l: int = 3) -> Measure:
        return cls((1,) * group.order(l), group.order(l))

    @classmethod
    def point(cls, i: int = 0, l: int = 3) -> Measure:
        w = [0] * group.order(l)
        w[i] = 1
        return cls(tuple(w), 1)

    @property
    def l(self) -> int:
        return group.log2_size(len(self.weights))

    @property
    def masses(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(w, self.denom) for w in self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> Fraction:
        return Fraction(self.weights[i], self.denom)

    def mass(self, e: Iterable[int]) -> Fraction:
        """Total mass ``mu(e)`` of a set of elements."""
        return Fraction(sum(self.weights[i] for i in e), self.denom)

    def __str__(self) -> str:
        return " ".join(format_rational(m) for m in self.masses)


def permute(mu: Measure, perm: Sequence[int]) -> Measure:
    """Push ``mu`` forward along an index permutation: the result has mass ``mu[i]`` at ``perm[i]``."""
    w = [0] * len(mu)
    for i, p in enumerate(perm):
        w[p] = mu.weights[i]
    return Measure(tuple(w), mu.denom)


def shift(mu: Measure, x: int) -> Measure:
    """``mu_x(E) = mu(E + x)``: the mass at ``x_i`` becomes ``mu[x_i + x]``."""
    row = group.addition_table(mu.l)[x]
    return Measure(tuple(mu.weights[row[i]] for i in range(len(mu))), mu.denom)


def char_fn(mu: Measure) -> tuple[Fraction, ...]:
    return tuple(Fraction(v, mu.denom) for v in group.walsh_forward(mu.weights))


def equivalent(mu: Measure, nu: Measure) -> bool:
    if mu.l != nu.l:
        raise ValueError("measures live on different groups")
    a = group.walsh_forward(mu.weights)
    b = group.walsh_forward(nu.weights)
    return all(abs(x) * nu.denom == abs(y) * mu.denom for x, y in zip(a, b))


def support(mu: Measure) -> frozenset:
    return frozenset(i for i, w in enumerate(mu.weights) if w)


def a_max(mu: Measure) -> Fraction:
    return Fraction(max(mu.weights), mu.denom)


def _nonempty(e) -> tuple[int, ...]:
    e = tuple(e)
    if not e:
        raise ValueError("set of elements must be nonempty")
    return e


def u_max(mu: Measure, e) -> Fraction:
    return Fraction(max(mu.weights[i] for i in _nonempty(e)), mu.denom)


def v_min(mu: Measure, e) -> Fraction:
    return Fraction(min(mu.weights[i] for i in _nonempty(e)), mu.denom)


def in_U(mu: Measure, e) -> bool:
    """``2 u(E) > mu(E)``: the heaviest point outweighs the rest of ``e``."""
    w = [mu.weights[i] for i in _nonempty(e)]
    return 2 * max(w) > sum(w)


def in_V(mu: Measure, e) -> bool:
    """``1/2 + 2 v(E) < mu(E)``."""
    w = [mu.weights[i] for i in _nonempty(e)]
    return mu.denom + 4 * min(w) < 2 * sum(w)


def w_equalities(h, k) -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
    """The three pairs ``({0, t_i}, {g, s_i})`` whose masses must agree for ``W(h, k)``."""
    h, k = frozenset(h), frozenset(k)
    if h <= k or len(h) != 2 or len(k) != 4:
        raise ValueError("need |h| = 2, |k| = 4 and h not contained in k")
    (g,) = h - {0}
    coset = group.complement_coset(k)
    pairs = []
    for big in group.overgroups(h):
        (t,) = (big & coset) - {g}
        (s,) = (big & k) - {0}
        pairs.append(((0, t), (g, s)))
    return tuple(pairs)


def in_W(mu: Measure, h, k) -> bool:
    w = mu.weights
    return all(w[a] + w[b] == w[c] + w[d] for (a, b), (c, d) in w_equalities(h, k))


def project_onto(mu: Measure, x2, x1) -> tuple[Fraction, ...]:
    """Masses ``mu({s, s + g})`` for ``s`` in ``x2`` (sorted), ``g`` the generator of ``x1``."""
    x1, x2 = frozenset(x1), frozenset(x2)
    if len(x1) != 2 or len(x2) != 4 or x1 & x2 != {0}:
        raise ValueError("(x1, x2) is not a decomposition")
    (g,) = x1 - {0}
    row = group.addition_table(3)[g]
    return tuple(Fraction(mu.weights[s] + mu.weights[row[s]], mu.denom) for s in sorted(x2))


def canonical(mu: Measure) -> Measure:
    """Shift representative with the lexicographically smallest mass vector."""
    return min((shift(mu, x) for x in range(len(mu))), key=lambda m: m.weights)
