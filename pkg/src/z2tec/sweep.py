"""Grid and random cross-validation of the closed-form classifier against the oracle.

Random measures come from ``random.Random(seed)`` (Mersenne Twister): for each
draw the denominator ``D`` is uniform on ``1..bound`` and the weights are a
uniform weak composition of ``D`` into 8 parts, obtained from
``sorted(rng.sample(range(D + 7), 7))`` as bar positions (stars and bars).

Work is split into contiguous shards; per-shard summaries are merged in shard
order, and the reported failures are sorted by ``(denominator, masses)`` so the
result does not depend on the number of workers.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import classifier, oracle, special
from .measure import Measure

MAX_FAILURES_KEPT = 20


def bars_to_weights(bars: Sequence[int], total: int, parts: int) -> tuple[int, ...]:
    out = []
    prev = -1
    for b in bars:
        out.append(b - prev - 1)
        prev = b
    out.append(total + parts - 2 - prev)
    return tuple(out)


def compositions(total: int, parts: int = 8) -> Iterator[tuple[int, ...]]:
    """All weak compositions of ``total`` into ``parts`` nonnegative integers."""
    for bars in combinations(range(total + parts - 1), parts - 1):
        yield bars_to_weights(bars, total, parts)


def composition_count(total: int, parts: int = 8) -> int:
    return math.comb(total + parts - 1, parts - 1)


def random_composition(rng: random.Random, total: int, parts: int = 8) -> tuple[int, ...]:
    bars = sorted(rng.sample(range(total + parts - 1), parts - 1))
    return bars_to_weights(bars, total, parts)


def random_weights(count: int, seed: int, bound: int, parts: int = 8) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    return [random_composition(rng, rng.randint(1, bound), parts) for _ in range(count)]


def failure_key(mu: Measure):
    return (mu.denom, mu.masses)


@dataclass
class Summary:
    total: int = 0
    tec: int = 0
    non_tec: int = 0
    disagreements: int = 0
    branches: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)  # Measures, smallest first

    def merge(self, other: Summary) -> None:
        self.total += other.total
        self.tec += other.tec
        self.non_tec += other.non_tec
        self.disagreements += other.disagreements
        self.branches.update(other.branches)
        self.failures = sorted(set(self.failures) | set(other.failures), key=failure_key)[:MAX_FAILURES_KEPT]

    @property
    def ok(self) -> bool:
        return self.disagreements == 0


def compare_shard(weights: Sequence[Sequence[int]]) -> Summary:
    """Classifier against oracle on each weight vector of a shard."""
    s = Summary()
    verdicts = oracle.bruteforce_batch(weights, 3)
    for w, ref in zip(weights, verdicts):
        mu = Measure.from_weights(w)
        v = classifier.is_tec_theorem4(mu, with_counterexample=False)
        s.total += 1
        if v.tec:
            s.tec += 1
            s.branches[v.branch] += 1
        else:
            s.non_tec += 1
        if v.tec != bool(ref):
            s.disagreements += 1
            s.failures.append(mu)
    s.failures = sorted(set(s.failures), key=failure_key)[:MAX_FAILURES_KEPT]
    return s


def _shards(items: Sequence, size: int) -> list:
    return [items[i:i + size] for i in range(0, len(items), size)]


def compare_all(weights: Sequence[Sequence[int]], workers: int = 1, shard_size: int = 4096) -> Summary:
    shards = _shards(list(weights), shard_size)
    total = Summary()
    if workers > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(compare_shard, shards):
                total.merge(part)
    else:
        for shard in shards:
            total.merge(compare_shard(shard))
    return total


def grid(denominator: int, workers: int = 1) -> Summary:
    return compare_all(list(compositions(denominator)), workers)


def fuzz(count: int, seed: int, bound: int, workers: int = 1) -> Summary:
    return compare_all(random_weights(count, seed, bound), workers)


# -- published criteria ---------------------------------------------------------

@dataclass
class TheoremSweep:
    theorem: int
    checked: int = 0
    mismatches: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def theorem1_sweep(steps: int = 100) -> TheoremSweep:
    """``q = k / steps`` for ``0 < k < steps``; ``q = 1/3`` is checked on the side.

    ``notes["flip"]`` is the pair of adjacent grid points where the oracle
    verdict changes.
    """
    out = TheoremSweep(1)
    flip = None
    prev = None
    for k in range(1, steps):
        q = Fraction(k, steps)
        ref = oracle.is_tec_bruteforce(special.poisson_haar(q)).tec
        out.checked += 1
        if special.theorem1_check(q) != ref:
            out.mismatches.append((q,))
        if prev is not None and prev[1] != ref:
            flip = (prev[0], q)
        prev = (q, ref)
    third = Fraction(1, 3)
    ref = oracle.is_tec_bruteforce(special.poisson_haar(third)).tec
    out.checked += 1
    if special.theorem1_check(third) != ref:
        out.mismatches.append((third,))
    out.notes["flip"] = flip
    out.notes["oracle_at_one_third"] = ref
    return out


def theorem2_sweep(steps: int = 10, diagonal_only: bool = False) -> TheoremSweep:
    out = TheoremSweep(2)
    vals = [Fraction(k, steps) for k in range(1, steps)]
    if diagonal_only:
        triples: Iterable = ((v, v, v) for v in vals)
    else:
        triples = ((p, q, r) for p in vals for q in vals for r in vals)
    triples = list(triples)
    measures = [special.theorem2_measure(*t) for t in triples]
    refs = _batch_verdicts(measures, 3)
    for t, ref in zip(triples, refs):
        out.checked += 1
        if special.theorem2_check(*t) != ref:
            out.mismatches.append(t)
    return out


def theorem3_sweep(max_denominator: int = 24) -> TheoremSweep:
    """Every Z_2^2 measure ``d / D``, ``D <= max_denominator`` (repeats across ``D`` included)."""
    out = TheoremSweep(3)
    for d in range(1, max_denominator + 1):
        ws = list(compositions(d, 4))
        refs = oracle.bruteforce_batch(ws, 2)
        for w, ref in zip(ws, refs):
            out.checked += 1
            mu = Measure.from_weights(w)
            if special.theorem3_check(mu) != bool(ref):
                out.mismatches.append(mu)
    return out


def _batch_verdicts(measures: Sequence[Measure], l: int) -> list[bool]:
    return [bool(v) for v in oracle.bruteforce_batch([m.weights for m in measures], l)]
