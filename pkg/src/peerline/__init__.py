"""Peer selection on the line metric: rules, social costs, and worst-case distortion.

Agents double as voters and candidates on a one-dimensional axis.  The package
reconstructs the left-to-right order from ordinal preferences, evaluates the
four social-cost objectives (utilitarian/egalitarian x additive/q-cost),
computes worst-case distortion over all metrics consistent with a profile
(exactly for additive objectives, certified lower bounds for q-cost), and ships
generators for the known adversarial instance families.  All comparisons run in
exact rational arithmetic.
"""

from peerline.profile_core import (
    CandAgg,
    CostSpec,
    Election,
    LineMetric,
    PreferenceProfile,
    ValidationReport,
    VoterAgg,
    EGAL_ADD,
    UTIL_ADD,
    egal_qcost,
    util_qcost,
    profile_from_positions,
    validate_election,
)
from peerline.ordering import (
    AgentOrder,
    ConsistencyCone,
    NotRealizable,
    consistency_constraints,
    is_consistent_metric,
    is_realizable,
    reconstruct_order,
)
from peerline.social_cost import agent_cost, extreme_costs, pairing_lower_bound, social_cost
from peerline.rules import RuleId, RuleInapplicable, apply_rule
from peerline.optimal import consecutive_optimal_util_add, optimal_committee
from peerline.distortion import (
    Budget,
    DistortionResult,
    Exactness,
    INFINITY,
    distortion_at,
    estimate_sup_distortion_qcost,
    exact_sup_distortion,
    two_location_sup,
)

__all__ = [
    "AgentOrder",
    "Budget",
    "CandAgg",
    "ConsistencyCone",
    "CostSpec",
    "DistortionResult",
    "EGAL_ADD",
    "Election",
    "Exactness",
    "INFINITY",
    "LineMetric",
    "NotRealizable",
    "PreferenceProfile",
    "RuleId",
    "RuleInapplicable",
    "UTIL_ADD",
    "ValidationReport",
    "VoterAgg",
    "agent_cost",
    "apply_rule",
    "consecutive_optimal_util_add",
    "consistency_constraints",
    "distortion_at",
    "egal_qcost",
    "estimate_sup_distortion_qcost",
    "exact_sup_distortion",
    "extreme_costs",
    "is_consistent_metric",
    "is_realizable",
    "optimal_committee",
    "pairing_lower_bound",
    "profile_from_positions",
    "reconstruct_order",
    "social_cost",
    "two_location_sup",
    "util_qcost",
    "validate_election",
]
