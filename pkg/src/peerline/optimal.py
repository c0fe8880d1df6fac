"""Optimal committees under full metric knowledge (the distortion denominator)."""

from __future__ import annotations

import itertools
from fractions import Fraction

from peerline.profile_core import Committee, CostSpec, LineMetric, UTIL_ADD
from peerline.social_cost import social_cost


def optimal_committee(
    metric: LineMetric, k: int, spec: CostSpec
) -> tuple[Committee, Fraction]:
    """Exact minimizer over all C(n,k) committees.

    Enumeration is lexicographic in the sorted member tuple and the first
    minimum wins, so ties resolve to the lexicographically smallest set.
    """
    if not 1 <= k <= metric.n:
        raise ValueError("k out of range")
    best: tuple[Committee, Fraction] | None = None
    for members in itertools.combinations(range(1, metric.n + 1), k):
        cost = social_cost(metric, members, spec)
        if best is None or cost < best[1]:
            best = (frozenset(members), cost)
    return best


def consecutive_optimal_util_add(
    metric: LineMetric, k: int
) -> tuple[Committee, Fraction]:
    """Best window of k consecutive agents (in position order), utilitarian additive.

    Some consecutive window is globally optimal for this objective, so the
    returned cost always equals the full-enumeration optimum.
    """
    if not 1 <= k <= metric.n:
        raise ValueError("k out of range")
    order = sorted(range(1, metric.n + 1), key=lambda a: (metric.position(a), a))
    best: tuple[Committee, Fraction] | None = None
    for i in range(metric.n - k + 1):
        members = frozenset(order[i : i + k])
        cost = social_cost(metric, members, UTIL_ADD)
        if best is None or cost < best[1]:
            best = (members, cost)
    return best
