"""BLADE: the decision-making engine."""

from .conflicts import ConflictReport, ConflictViolation, blocked_attributes, blocked_payload, check_conflicts
from .levels import LEVEL_LABELS, PreferenceLevel, level_label, parse_level_label
from .patterns import PatternRecommendation, recommend_patterns
from .profile import PreferenceProfile, Requirement, load_profile, parse_profile
from .recommend import RecommendationReport, recommend, report_from_payload
from .topsis import (
    Contribution,
    Criterion,
    DecisionMatrix,
    DisqualificationRecord,
    Ranking,
    RankingEntry,
    WeightVector,
    explain,
    topsis_rank,
)
from .weights import derive_weights, filter_required

__all__ = [
    "ConflictReport",
    "ConflictViolation",
    "Contribution",
    "Criterion",
    "DecisionMatrix",
    "DisqualificationRecord",
    "LEVEL_LABELS",
    "PatternRecommendation",
    "PreferenceLevel",
    "PreferenceProfile",
    "Ranking",
    "RankingEntry",
    "RecommendationReport",
    "Requirement",
    "WeightVector",
    "blocked_attributes",
    "blocked_payload",
    "check_conflicts",
    "derive_weights",
    "explain",
    "filter_required",
    "level_label",
    "load_profile",
    "parse_level_label",
    "parse_profile",
    "recommend",
    "recommend_patterns",
    "report_from_payload",
    "topsis_rank",
]
