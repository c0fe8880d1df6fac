"""Left-to-right order reconstruction and the cone of consistent gap vectors.

A metric d is consistent with a profile iff d(a,b) < d(a,c) implies b above c
in a's ranking; contrapositively, b above c forces d(a,b) <= d(a,c).  Fixing an
order pi turns each such comparison into a linear inequality over the gap
vector g (g_i = distance between neighbours pi(i), pi(i+1)), and the set of
consistent metrics becomes a polyhedral cone in g-space.  Only weak
inequalities are imposed: ties may be broken per agent, so the cone is exactly
the set of consistent metrics, closed faces included.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from peerline import geometry
from peerline.profile_core import LineMetric, PreferenceProfile


class NotRealizable(Exception):
    """No position vector on the line induces the profile."""


@dataclass(frozen=True)
class AgentOrder:
    """Agents listed left to right.

    Orientation is canonical: the first agent id is smaller than the last, so
    exactly one of the two mirror-image orders is ever returned.
    """

    order: tuple[int, ...]

    def __init__(self, order):
        order = tuple(order)
        if len(order) > 1 and order[0] > order[-1]:
            order = order[::-1]
        object.__setattr__(self, "order", order)

    @property
    def n(self) -> int:
        return len(self.order)

    def agent_at(self, slot: int) -> int:
        """Agent in 1-based slot (1 = leftmost)."""
        return self.order[slot - 1]

    def slot_of(self, agent: int) -> int:
        return self.order.index(agent) + 1


@dataclass(frozen=True)
class ConsistencyCone:
    """Rows r with r . g <= 0 over the n-1 gap variables of `order`."""

    order: AgentOrder
    rows: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return self.order.n - 1


def _interval_coeffs(n: int, slot_a: int, slot_b: int) -> list[int]:
    """Indicator of the gaps between two slots: d = sum of those gaps."""
    lo, hi = min(slot_a, slot_b), max(slot_a, slot_b)
    return [1 if lo <= i + 1 < hi else 0 for i in range(n - 1)]


def consistency_constraints(
    profile: PreferenceProfile, order: AgentOrder
) -> ConsistencyCone:
    """Cone of gap vectors realizing the profile under `order`.

    One inequality d(a,b) - d(a,c) <= 0 per adjacent ranking pair b above c;
    rows that hold for every g >= 0 (all coefficients <= 0) are dropped, and
    duplicates are merged.
    """
    n = profile.n
    rows: set[tuple[int, ...]] = set()
    for a in range(1, n + 1):
        sa = order.slot_of(a)
        ranking = profile.ranking_of(a)
        for b, c in zip(ranking, ranking[1:]):
            rb = _interval_coeffs(n, sa, order.slot_of(b))
            rc = _interval_coeffs(n, sa, order.slot_of(c))
            row = tuple(x - y for x, y in zip(rb, rc))
            if any(v > 0 for v in row):
                rows.add(row)
    return ConsistencyCone(order=order, rows=tuple(sorted(rows)))


def is_realizable(profile: PreferenceProfile, order: AgentOrder) -> bool:
    """True iff some nonzero gap vector (normalized to sum 1) fits the cone."""
    cone = consistency_constraints(profile, order)
    return geometry.slice_feasible(cone.dim, cone.rows)


def reconstruct_order(profile: PreferenceProfile) -> AgentOrder:
    """Recover the left-to-right order (up to canonical orientation).

    Fast path: the last entry of agent 1's ranking is a farthest agent, hence
    extreme, and an extreme agent's ranking read front to back is the order.
    Ties can spoil the fast path, so on failure every agent is tried as the
    extreme before giving up.
    """
    n = profile.n
    if n == 1:
        return AgentOrder((1,))
    candidates = [profile.ranking_of(1)[-1]]
    candidates += [a for a in range(1, n + 1) if a != candidates[0]]
    for extreme in candidates:
        order = AgentOrder(profile.ranking_of(extreme))
        if is_realizable(profile, order):
            return order
    raise NotRealizable("no candidate order admits a consistent line metric")


def is_consistent_metric(profile: PreferenceProfile, metric: LineMetric) -> bool:
    """Weak consistency check: b above c in a's ranking => d(a,b) <= d(a,c)."""
    for a in range(1, profile.n + 1):
        ranking = profile.ranking_of(a)
        for b, c in zip(ranking, ranking[1:]):
            if metric.distance(a, b) > metric.distance(a, c):
                return False
    return True


def gap_vector(metric: LineMetric, order: AgentOrder) -> tuple[Fraction, ...]:
    """Gaps of `metric` along `order`; raises if positions are not monotone."""
    gaps = tuple(
        metric.position(order.agent_at(i + 1)) - metric.position(order.agent_at(i))
        for i in range(1, order.n)
    )
    if any(g < 0 for g in gaps):
        raise ValueError("metric positions are not monotone along the order")
    return gaps


@lru_cache(maxsize=4096)
def _cached_geometry(profile: PreferenceProfile):
    """(order, cone, vertices, edges) of the profile's sliced cone."""
    order = reconstruct_order(profile)
    cone = consistency_constraints(profile, order)
    verts = geometry.slice_vertices(cone.dim, cone.rows)
    edges = geometry.polytope_edges(verts)
    return order, cone, verts, edges
