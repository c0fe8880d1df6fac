"""Individual and social costs for the four objectives, plus proof identities.

An agent's cost for a committee is either the sum of its distances to all
members (additive) or its distance to the q-th closest member (q-cost, multiset
semantics: duplicate distances count separately).  The social cost aggregates
agent costs by sum (utilitarian) or max (egalitarian).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from peerline.profile_core import CandAgg, Committee, CostSpec, LineMetric, VoterAgg


def agent_cost(
    metric: LineMetric, committee: Iterable[int], agent: int, spec: CostSpec
) -> Fraction:
    members = sorted(set(committee))
    if spec.cand_agg is CandAgg.ADDITIVE:
        return sum(
            (metric.distance(agent, s) for s in members), start=Fraction(0)
        )
    if spec.q > len(members):
        raise ValueError(f"q={spec.q} exceeds committee size {len(members)}")
    dists = sorted(metric.distance(agent, s) for s in members)
    return dists[spec.q - 1]


def social_cost(metric: LineMetric, committee: Iterable[int], spec: CostSpec) -> Fraction:
    members = frozenset(committee)
    costs = [agent_cost(metric, members, a, spec) for a in range(1, metric.n + 1)]
    if spec.voter_agg is VoterAgg.UTILITARIAN:
        return sum(costs, start=Fraction(0))
    return max(costs)


def _sorted_slots(metric: LineMetric) -> list[int]:
    """Agents left to right (ties by id); slot i is element i-1."""
    return sorted(range(1, metric.n + 1), key=lambda a: (metric.position(a), a))


def pairing_lower_bound(metric: LineMetric, committee: Iterable[int]) -> Fraction:
    """Floor on the utilitarian 2-cost of any size-2 committee.

    Pair the i-th leftmost agent with the i-th rightmost: together they pay at
    least d(i, n-i+1) + d(s1, s2).  Odd n adds the median agent's own 2-cost.
    """
    members = sorted(set(committee))
    if len(members) != 2:
        raise ValueError("pairing bound is defined for committees of size 2")
    s1, s2 = members
    order = _sorted_slots(metric)
    n = metric.n
    total = Fraction(0)
    for i in range(n // 2):
        total += metric.distance(order[i], order[n - 1 - i])
    total += (n // 2) * metric.distance(s1, s2)
    if n % 2 == 1:
        median = order[n // 2]
        total += max(metric.distance(median, s1), metric.distance(median, s2))
    return total


def extreme_costs(
    metric: LineMetric, committee: Iterable[int]
) -> tuple[Fraction, Fraction]:
    """Additive costs of the committee for the leftmost and rightmost agents.

    Their sum is k * d(leftmost, rightmost) for every committee, and the
    egalitarian-additive social cost equals the larger of the two.
    """
    members = frozenset(committee)
    order = _sorted_slots(metric)
    left, right = order[0], order[-1]
    cost_left = sum((metric.distance(left, s) for s in members), start=Fraction(0))
    cost_right = sum((metric.distance(right, s) for s in members), start=Fraction(0))
    return cost_left, cost_right
