"""Core data model: profiles, elections, line metrics, committees, cost specs.

Agents are numbered 1..n.  A ranking is a permutation of [1..n] listing the
agents from most to least preferred; every agent ranks all n agents, itself
included.  Positions are held as exact rationals so that downstream distortion
ratios can be compared exactly against constants such as 4/3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Sequence

Ranking = tuple[int, ...]
Committee = frozenset[int]


@dataclass(frozen=True)
class PreferenceProfile:
    """Strict rankings, one per agent, each a permutation of [1..n]."""

    rankings: tuple[Ranking, ...]

    def __init__(self, rankings: Iterable[Iterable[int]]):
        object.__setattr__(
            self, "rankings", tuple(tuple(int(b) for b in r) for r in rankings)
        )

    @property
    def n(self) -> int:
        return len(self.rankings)

    def ranking_of(self, agent: int) -> Ranking:
        return self.rankings[agent - 1]

    def rank(self, agent: int, other: int) -> int:
        """0-based position of `other` in `agent`'s ranking."""
        return self.rankings[agent - 1].index(other)

    def prefers(self, agent: int, b: int, c: int) -> bool:
        """True iff `agent` ranks b strictly above c."""
        r = self.rankings[agent - 1]
        return r.index(b) < r.index(c)


@dataclass(frozen=True)
class Election:
    profile: PreferenceProfile
    k: int

    @property
    def n(self) -> int:
        return self.profile.n


def _to_fraction(value) -> tuple[Fraction, bool]:
    """Convert a coordinate to Fraction; second item flags an exact source."""
    if isinstance(value, bool):
        raise TypeError("boolean is not a position")
    if isinstance(value, (int, Fraction)):
        return Fraction(value), True
    if isinstance(value, str):
        return Fraction(value), True
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"non-finite position {value!r}")
        return Fraction(value), False
    raise TypeError(f"unsupported position type {type(value).__name__}")


@dataclass(frozen=True)
class LineMetric:
    """Positions on the line; d(a,b) = |x_a - x_b|.

    Integer, string ("p/q"), and Fraction inputs are kept exact; float input is
    converted to its exact binary value but flagged `exact=False` so reports can
    warn that derived rationals inherit floating-point noise.
    """

    positions: tuple[Fraction, ...] = field(init=False)
    exact: bool = field(init=False)

    def __init__(self, positions: Sequence):
        coords, exact = [], True
        for value in positions:
            f, ok = _to_fraction(value)
            coords.append(f)
            exact = exact and ok
        object.__setattr__(self, "positions", tuple(coords))
        object.__setattr__(self, "exact", exact)

    @property
    def n(self) -> int:
        return len(self.positions)

    def position(self, agent: int) -> Fraction:
        return self.positions[agent - 1]

    def distance(self, a: int, b: int) -> Fraction:
        return abs(self.positions[a - 1] - self.positions[b - 1])


class VoterAgg(Enum):
    UTILITARIAN = "utilitarian"
    EGALITARIAN = "egalitarian"


class CandAgg(Enum):
    ADDITIVE = "additive"
    QCOST = "qcost"


@dataclass(frozen=True)
class CostSpec:
    """(voter aggregation) x (candidate aggregation), with q for q-cost."""

    voter_agg: VoterAgg
    cand_agg: CandAgg
    q: int | None = None

    def __post_init__(self):
        if self.cand_agg is CandAgg.QCOST:
            if self.q is None or self.q < 1:
                raise ValueError("q-cost requires an integer q >= 1")
        elif self.q is not None:
            raise ValueError("q is only meaningful for q-cost")

    @property
    def is_additive(self) -> bool:
        return self.cand_agg is CandAgg.ADDITIVE


UTIL_ADD = CostSpec(VoterAgg.UTILITARIAN, CandAgg.ADDITIVE)
EGAL_ADD = CostSpec(VoterAgg.EGALITARIAN, CandAgg.ADDITIVE)


def util_qcost(q: int) -> CostSpec:
    return CostSpec(VoterAgg.UTILITARIAN, CandAgg.QCOST, q)


def egal_qcost(q: int) -> CostSpec:
    return CostSpec(VoterAgg.EGALITARIAN, CandAgg.QCOST, q)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]


def validate_election(election: Election) -> ValidationReport:
    """Report duplicate/out-of-range ranking entries and a k out of range."""
    problems: list[str] = []
    n = election.n
    expected = set(range(1, n + 1))
    for agent, ranking in enumerate(election.profile.rankings, start=1):
        seen = set(ranking)
        if len(seen) != len(ranking):
            problems.append(f"duplicate agent in ranking {agent}")
        if seen - expected:
            problems.append(f"out-of-range agent id in ranking {agent}")
        if len(ranking) != n or (seen | expected) != expected:
            if f"duplicate agent in ranking {agent}" not in problems:
                problems.append(f"ranking {agent} is not a permutation of 1..{n}")
    if not 1 <= election.k <= n:
        problems.append("k out of range")
    return ValidationReport(ok=not problems, violations=tuple(problems))


def profile_from_positions(
    metric: LineMetric | Sequence,
    tie_break: Callable[[int, int], object] | None = None,
) -> PreferenceProfile:
    """Profile induced by positions: each agent sorts the others by distance.

    The owner always comes first (its own distance 0 beats any tie), then ties
    at equal distance fall back to `tie_break(observer, candidate)`, by default
    the candidate's id.
    """
    if not isinstance(metric, LineMetric):
        metric = LineMetric(metric)
    if tie_break is None:
        tie_break = lambda observer, candidate: candidate
    rankings = []
    for a in range(1, metric.n + 1):
        others = sorted(
            (b for b in range(1, metric.n + 1) if b != a),
            key=lambda b: (metric.distance(a, b), tie_break(a, b)),
        )
        rankings.append((a, *others))
    return PreferenceProfile(rankings)
