"""Ground-truth decision by exhaustive sign-pattern enumeration.

A measure ``nu`` equivalent to ``mu`` has characteristic function
``eps * mu_hat`` for a sign vector ``eps`` with ``eps[0] = +1``.  Inverting the
transform for every such ``eps`` lists all candidates; ``mu`` has a trivial
equivalence class iff every nonnegative candidate is a shift of ``mu``.

The same linear maps ``a -> b`` are matched here against the closed-form
families A, B, C_k, D_k (shifts of ``mu``, of ``1/4 - a``, of the ``c_i``
coefficients and of ``1/4 - c_i``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import group
from .measure import Measure, canonical, shift
from .verdict import TecVerdict

SignPattern = tuple  # tuple[int, ...] of +1/-1, first entry +1

_INT64_SAFE = 1 << 62


def pattern_from_index(p: int, l: int = 3) -> SignPattern:
    """Bit ``y - 1`` of ``p`` set means sign -1 at nontrivial character ``y``."""
    n = group.order(l)
    if not 0 <= p < 1 << (n - 1):
        raise ValueError(f"pattern index out of range for l={l}: {p}")
    return (1,) + tuple(-1 if p >> (y - 1) & 1 else 1 for y in range(1, n))


def pattern_index(eps: Sequence[int]) -> int:
    if eps[0] != 1:
        raise ValueError("sign pattern must be +1 at the trivial character")
    return sum(1 << (y - 1) for y in range(1, len(eps)) if eps[y] == -1)


def character_row(j: int, l: int = 3) -> SignPattern:
    return group.character_table(l)[j]


@lru_cache(maxsize=None)
def _patterns_array(l: int) -> np.ndarray:
    n = group.order(l)
    return np.array([pattern_from_index(p, l) for p in range(1 << (n - 1))], dtype=np.int64)


@lru_cache(maxsize=None)
def _hadamard(l: int) -> np.ndarray:
    return np.array(group.character_table(l), dtype=np.int64)


@dataclass(frozen=True)
class CandidateSolution:
    pattern: SignPattern
    values: tuple[Fraction, ...]
    valid: bool
    trivial: bool
    shift_index: int | None = None

    def measure(self) -> Measure:
        if not self.valid:
            raise ValueError("candidate has a negative entry")
        return Measure.from_masses(self.values)


def candidate(mu: Measure, eps: Sequence[int]) -> CandidateSolution:
    """Solve the linear system selected by ``eps`` for the unknown masses."""
    eps = tuple(int(e) for e in eps)
    if len(eps) != len(mu) or eps[0] != 1 or any(e not in (1, -1) for e in eps):
        raise ValueError("sign pattern must be +-1 of length 2^l with +1 first")
    hat = group.walsh_forward(mu.weights)
    scaled = group.walsh_forward(tuple(e * v for e, v in zip(eps, hat)))
    scale = len(mu) * mu.denom
    values = tuple(Fraction(v, scale) for v in scaled)
    valid = all(v >= 0 for v in scaled)
    shift_index = None
    if valid:
        for j in range(len(mu)):
            s = shift(mu, j)
            if all(v * s.denom == len(mu) * mu.denom * w for v, w in zip(scaled, s.weights)):
                shift_index = j
                break
    return CandidateSolution(eps, values, valid, shift_index is not None, shift_index)


def candidates(mu: Measure) -> Iterable[CandidateSolution]:
    for p in range(1 << (len(mu) - 1)):
        yield candidate(mu, pattern_from_index(p, mu.l))


# -- vectorised verdicts -----------------------------------------------------

def _weights_array(rows, n: int) -> np.ndarray:
    arr = np.asarray(rows, dtype=object).reshape(-1, n)
    # transform values reach n * denom, the candidate side n * n * max weight
    if arr.size and max(int(x) for x in arr.flat) * n * n * n >= _INT64_SAFE:
        return arr
    return arr.astype(np.int64)


@lru_cache(maxsize=None)
def _mismatch(l: int) -> np.ndarray:
    """``out[p * n + j, y] = 1`` where pattern ``p`` differs from character row ``j`` at ``y``."""
    pats = _patterns_array(l)
    rows = _hadamard(l)
    n = group.order(l)
    diff = pats[:, None, :] != rows[None, :, :]
    return diff.reshape(len(pats) * n, n).astype(np.int64)


def nontrivial_patterns(weights: np.ndarray, l: int) -> np.ndarray:
    """Boolean ``(N, patterns)`` array: candidate valid and not a shift.

    Triviality is tested on the transform side: the candidate equals the
    shift by ``x_j`` iff ``eps`` agrees with the character row of ``x_j``
    wherever ``mu_hat`` is nonzero.
    """
    h = _hadamard(l)
    pats = _patterns_array(l)
    n = group.order(l)
    w = _weights_array(weights, n)
    if w.dtype == object:
        h = h.astype(object)
        pats = pats.astype(object)
    hat = w @ h
    scaled = (hat[:, None, :] * pats[None, :, :]) @ h
    valid = (scaled >= 0).all(axis=2)
    nonzero = (hat != 0).astype(np.int64)
    conflicts = nonzero @ _mismatch(l).T
    trivial = (conflicts.reshape(len(w), len(pats), n) == 0).any(axis=2)
    return valid & ~trivial


def bruteforce_batch(weights, l: int = 3, chunk: int = 2048) -> np.ndarray:
    """Oracle verdicts for many measures given as rows of integer weights."""
    n = group.order(l)
    w = _weights_array(weights, n)
    out = np.empty(len(w), dtype=bool)
    step = max(1, chunk >> max(0, 2 * (l - 3)))
    for start in range(0, len(w), step):
        part = nontrivial_patterns(w[start:start + step], l)
        out[start:start + step] = ~part.any(axis=1)
    return out


def is_tec_bruteforce(mu: Measure) -> TecVerdict:
    """Decide triviality of the equivalence class of ``mu`` by enumeration.

    The witness for a negative verdict is the nontrivial candidate with the
    smallest pattern index.
    """
    if mu.l > group.MAX_L:
        raise ValueError(f"oracle supports l <= {group.MAX_L}")
    bad = nontrivial_patterns(np.array([mu.weights]), mu.l)[0]
    hits = np.flatnonzero(bad)
    if not len(hits):
        return TecVerdict(True, "oracle")
    p = int(hits[0])
    cand = candidate(mu, pattern_from_index(p, mu.l))
    assert cand.valid and not cand.trivial
    return TecVerdict(False, "counterexample", counterexample=cand.measure(), pattern=p)


def equivalence_class(mu: Measure) -> list[Measure]:
    """Every measure equivalent to ``mu``, one canonical shift representative each."""
    if mu.l > group.MAX_L:
        raise ValueError(f"oracle supports l <= {group.MAX_L}")
    reps = {canonical(mu)}
    bad = nontrivial_patterns(np.array([mu.weights]), mu.l)[0]
    for p in np.flatnonzero(bad):
        reps.add(canonical(candidate(mu, pattern_from_index(int(p), mu.l)).measure()))
    return sorted(reps, key=lambda m: m.masses)


# -- closed forms --------------------------------------------------------------

# Row i gives c_i as combination of a_0..a_7, each entry times 1/2.
_C1_HALVES = (
    (-1, 0, 1, 1, 0, 0, 1, 0),
    (0, -1, 0, 0, 1, 1, 0, 1),
    (1, 0, -1, 1, 0, 0, 1, 0),
    (1, 0, 1, -1, 0, 0, 1, 0),
    (0, 1, 0, 0, -1, 1, 0, 1),
    (0, 1, 0, 0, 1, -1, 0, 1),
    (1, 0, 1, 1, 0, 0, -1, 0),
    (0, 1, 0, 0, 1, 1, 0, -1),
)


def _require_l3(mu: Measure) -> tuple[Fraction, ...]:
    if mu.l != 3:
        raise ValueError("closed forms are defined on Z_2^3 only")
    return mu.masses


def _shifted(coeffs: Sequence[Fraction], j: int) -> tuple[Fraction, ...]:
    row = group.addition_table(3)[j]
    return tuple(coeffs[row[i]] for i in range(8))


def _c_coefficients(a: Sequence[Fraction], k: int) -> list[Fraction]:
    s = group.sigma(k)
    c = [Fraction(0)] * 8
    for i, row in enumerate(_C1_HALVES):
        c[s[i]] = sum((coef * a[s[m]] for m, coef in enumerate(row) if coef), Fraction(0)) / 2
    return c


def closed_form_A(mu: Measure, j: int) -> tuple[Fraction, ...]:
    return _shifted(_require_l3(mu), j)


def closed_form_B(mu: Measure, j: int) -> tuple[Fraction, ...]:
    a = _require_l3(mu)
    quarter = sum(a, Fraction(0)) / 4
    return _shifted([quarter - x for x in a], j)


def closed_form_C(mu: Measure, k: int, j: int) -> tuple[Fraction, ...]:
    return _shifted(_c_coefficients(_require_l3(mu), k), j)


def closed_form_D(mu: Measure, k: int, j: int) -> tuple[Fraction, ...]:
    a = _require_l3(mu)
    quarter = sum(a, Fraction(0)) / 4
    return _shifted([quarter - c for c in _c_coefficients(a, k)], j)


class SystemFamily(NamedTuple):
    tag: str  # "A", "B", "C<k>" or "D<k>"
    shift_index: int

    @property
    def letter(self) -> str:
        return self.tag[0]

    def __str__(self) -> str:
        return f"{self.tag} j={self.shift_index}"


def _closed_forms() -> Iterable[tuple[SystemFamily, callable]]:
    for j in range(8):
        yield SystemFamily("A", j), lambda mu, j=j: closed_form_A(mu, j)
    for j in range(8):
        yield SystemFamily("B", j), lambda mu, j=j: closed_form_B(mu, j)
    for k in range(1, 8):
        for j in range(8):
            yield SystemFamily(f"C{k}", j), lambda mu, k=k, j=j: closed_form_C(mu, k, j)
    for k in range(1, 8):
        for j in range(8):
            yield SystemFamily(f"D{k}", j), lambda mu, k=k, j=j: closed_form_D(mu, k, j)


def linear_map(fn) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix (rows = output index) of a map evaluated on the 8 point masses."""
    cols = [fn(Measure.point(m, 3)) for m in range(8)]
    return tuple(tuple(cols[m][i] for m in range(8)) for i in range(8))


def pattern_matrix(p: int) -> tuple[tuple[Fraction, ...], ...]:
    eps = pattern_from_index(p, 3)
    return linear_map(lambda mu: candidate(mu, eps).values)


@lru_cache(maxsize=None)
def classify_systems() -> dict[int, SystemFamily]:
    """Assign each of the 128 sign patterns on Z_2^3 to its closed-form family.

    Raises ``RuntimeError`` if a pattern matches no family or several.
    """
    forms = {}
    for fam, fn in _closed_forms():
        forms.setdefault(linear_map(fn), []).append(fam)
    result = {}
    for p in range(128):
        matches = forms.get(pattern_matrix(p), [])
        if len(matches) != 1:
            raise RuntimeError(f"pattern {p} matched {len(matches)} families: {matches}")
        result[p] = matches[0]
    return result


def family_counts(table: dict[int, SystemFamily]) -> dict[str, int]:
    counts = {"A": 0, "B": 0, "C": 0, "D": 0}
    for fam in table.values():
        counts[fam.letter] += 1
    return counts


def families_of_candidate(mu: Measure, values: Sequence[Fraction]) -> set[SystemFamily]:
    """All closed forms that evaluate to ``values`` on ``mu`` (several when ``mu`` is degenerate)."""
    values = tuple(values)
    return {fam for fam, fn in _closed_forms() if fn(mu) == values}

