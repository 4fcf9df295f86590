"""Near-balanced two-way partitions of odd-number sequences, and the phase
plans they induce.

Both constructions are deterministic: the same input always yields the
same partition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import EtaOutOfRange, InvalidValue


@dataclass(frozen=True)
class BalancedPartition:
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]

    @property
    def discrepancy(self) -> int:
        return abs(sum(self.part_a) - sum(self.part_b))

    def multiset(self) -> Counter:
        return Counter(self.part_a) + Counter(self.part_b)


# leftover size -> (part_a, part_b) for the smallest odd numbers
_BASE = {
    0: ((), ()),
    1: ((1,), ()),
    3: ((1, 3), (5,)),
    6: ((1, 3, 5, 9), (7, 11)),
}
_LEFTOVER = {0: 0, 1: 1, 2: 6, 3: 3}


def partition_odds(n: int) -> BalancedPartition:
    """Split ``{1, 3, ..., 2n-1}`` into two parts whose sums differ by at
    most 1 (at most 2 when ``n == 2``)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 2:
        return BalancedPartition((1,), (3,))
    rest = _LEFTOVER[n % 4]
    a, b = (list(p) for p in _BASE[rest])
    # every remaining block of four consecutive odds a1<a2<a3<a4 splits as
    # {a1, a4} / {a2, a3}; block starts step by 8 in value
    first = 2 * rest + 1
    top = 2 * n
    a += range(first, top, 8)
    a += range(first + 6, top, 8)
    b += range(first + 2, top, 8)
    b += range(first + 4, top, 8)
    return BalancedPartition(tuple(sorted(a)), tuple(sorted(b)))


def _heavier_first(p: BalancedPartition) -> tuple[list[int], list[int]]:
    if sum(p.part_a) >= sum(p.part_b):
        return list(p.part_a), list(p.part_b)
    return list(p.part_b), list(p.part_a)


def partition_odds_plus(n: int, k: int, value: int) -> BalancedPartition:
    """Split ``{1, 3, ..., 2n-1}`` plus ``k`` copies of ``value`` (which must be
    ``2n-1`` or ``2n``) into two parts whose sums differ by at most 2."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if value not in (2 * n - 1, 2 * n):
        raise InvalidValue(f"value must be {2 * n - 1} or {2 * n}, got {value}")
    if k % 2 == 0:
        base = partition_odds(n)
        half = [value] * (k // 2)
        return BalancedPartition(tuple(sorted(list(base.part_a) + half)),
                                 tuple(sorted(list(base.part_b) + half)))

    # k odd: move 2n-1 over to the copies, which then number k+1 (even)
    if n == 1:
        x, y = [], []
    else:
        x, y = _heavier_first(partition_odds(n - 1))
    h = (k + 1) // 2
    if value == 2 * n - 1:
        p = [value] * h
        q = [value] * h
    else:
        p = [value] * h
        q = [value] * (h - 1) + [2 * n - 1]
    return BalancedPartition(tuple(sorted(x + q)), tuple(sorted(y + p)))


@dataclass(frozen=True)
class PhasePlan:
    """Which phases run the out-biased routine and which the in-biased one.

    ``weights[i-1]`` is the partition weight attached to phase ``i``.
    """

    r: int
    out_phases: frozenset[int]
    in_phases: frozenset[int]
    weights: tuple[int, ...]

    def mode(self, i: int) -> str:
        if i in self.out_phases:
            return "out"
        if i in self.in_phases:
            return "in"
        raise KeyError(i)

    def out_weight(self) -> int:
        return sum(self.weights[i - 1] for i in self.out_phases)

    def in_weight(self) -> int:
        return sum(self.weights[i - 1] for i in self.in_phases)


def _assign(weights, part_a):
    """Map the multiset ``part_a`` onto phase indices, lowest index first."""
    want = Counter(part_a)
    out = set()
    for i, w in enumerate(weights, start=1):
        if want[w] > 0:
            want[w] -= 1
            out.add(i)
    assert not +want, "partition does not match the weights"
    return frozenset(out)


def phase_plan(r: int) -> PhasePlan:
    if r < 1:
        raise ValueError("r must be positive")
    weights = tuple(2 * i - 1 for i in range(1, r + 1))
    out = _assign(weights, partition_odds(r).part_a)
    return PhasePlan(r, out, frozenset(range(1, r + 1)) - out, weights)


def eta_phase_weights(r: int, eta: int) -> tuple[int, ...]:
    """``min(eta, 2i+1) - 2`` for phases ``i = 1..r``."""
    return tuple(min(eta, 2 * i + 1) - 2 for i in range(1, r + 1))


def phase_plan_eta(r: int, eta: int) -> PhasePlan:
    if r < 1:
        raise ValueError("r must be positive")
    if not 3 <= eta <= 2 * r + 1:
        raise EtaOutOfRange(f"eta must lie in [3, {2 * r + 1}], got {eta}")
    weights = eta_phase_weights(r, eta)
    m = (eta - 1) // 2
    part = partition_odds_plus(m, r - m, eta - 2)
    # weights are non-decreasing in the phase index, so sorted order is phase order
    out = _assign(weights, part.part_a)
    return PhasePlan(r, out, frozenset(range(1, r + 1)) - out, weights)
