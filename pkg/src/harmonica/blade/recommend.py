"""Full recommendation pipeline: conflicts, screening, ranking, patterns."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import AllDisqualifiedError, InvalidRequestError
from .conflicts import ConflictReport, check_conflicts
from .patterns import PatternRecommendation, recommend_patterns
from .profile import PreferenceProfile
from .topsis import (
    Contribution,
    DecisionMatrix,
    DisqualificationRecord,
    Ranking,
    RankingEntry,
    topsis_rank,
)
from .weights import derive_weights, filter_required


@dataclass(frozen=True)
class RecommendationReport:
    conflicts: ConflictReport
    ranking: Ranking | None
    patterns: list[PatternRecommendation] | None

    @property
    def gated(self) -> bool:
        """True when error-severity conflicts suppressed the ranking."""
        return self.ranking is None

    def to_payload(self) -> dict:
        return {
            "conflicts": self.conflicts.to_payload(),
            "ranking": self.ranking.to_payload() if self.ranking else None,
            "patterns": [p.to_payload() for p in self.patterns] if self.patterns is not None else None,
        }


def recommend(profile: PreferenceProfile, kb) -> RecommendationReport:
    """Produce the full report for a profile.

    Refuses to rank while any error-severity conflict stands: the report
    then carries the conflicts alone so the user can resolve them first.
    Warning-severity conflicts are surfaced but do not block ranking.
    """
    conflicts = check_conflicts(profile, kb)
    if conflicts.has_errors:
        return RecommendationReport(conflicts=conflicts, ranking=None, patterns=None)

    qualified, disqualified = filter_required(profile, kb)
    if not qualified:
        raise AllDisqualifiedError(disqualified)

    weights = derive_weights(profile, kb)
    active_attributes = [a for a in kb.attribute_ids if a in weights.weights]
    matrix = DecisionMatrix.from_kb(kb, qualified, active_attributes)
    ranking = topsis_rank(matrix, weights, disqualified=tuple(disqualified))

    top_chain = kb.blockchain(ranking.entries[0].blockchain_id)
    patterns = recommend_patterns(profile, top_chain, kb)
    return RecommendationReport(conflicts=conflicts, ranking=ranking, patterns=patterns)


def report_from_payload(payload: dict) -> RecommendationReport:
    """Rebuild a report from its JSON payload (the /recommend response body).

    Only the fields the configurator needs are interpreted strictly; the
    conflicts block is carried through untouched.
    """
    if not isinstance(payload, dict):
        raise InvalidRequestError("report must be a JSON object")
    ranking_doc = payload.get("ranking")
    ranking = None
    if ranking_doc is not None:
        if not isinstance(ranking_doc, dict) or not isinstance(ranking_doc.get("entries"), list):
            raise InvalidRequestError("report: 'ranking.entries' must be a list")
        entries = []
        for entry in ranking_doc["entries"]:
            if not isinstance(entry, dict) or not isinstance(entry.get("blockchain_id"), str):
                raise InvalidRequestError("report: ranking entries need a 'blockchain_id'")
            contributions = tuple(
                Contribution(
                    attribute_id=attribute_id,
                    weighted_value=float(row.get("weighted_value", 0.0)),
                    ideal_gap=float(row.get("ideal_gap", 0.0)),
                    anti_ideal_gap=float(row.get("anti_ideal_gap", 0.0)),
                )
                for attribute_id, row in entry.get("per_criterion_contribution", {}).items()
            )
            entries.append(
                RankingEntry(
                    blockchain_id=entry["blockchain_id"],
                    closeness=float(entry.get("closeness", 0.0)),
                    d_plus=float(entry.get("d_plus", 0.0)),
                    d_minus=float(entry.get("d_minus", 0.0)),
                    contributions=contributions,
                )
            )
        disqualified = tuple(
            DisqualificationRecord(
                blockchain_id=row["blockchain_id"],
                attribute_id=row["attribute_id"],
                actual_score=row["actual_score"],
                min_level=row["min_level"],
            )
            for row in ranking_doc.get("disqualified", [])
        )
        ranking = Ranking(entries=tuple(entries), disqualified=disqualified)

    patterns_doc = payload.get("patterns")
    patterns = None
    if patterns_doc is not None:
        if not isinstance(patterns_doc, list):
            raise InvalidRequestError("report: 'patterns' must be a list")
        patterns = []
        for row in patterns_doc:
            if not isinstance(row, dict) or not isinstance(row.get("pattern_id"), str):
                raise InvalidRequestError("report: pattern entries need a 'pattern_id'")
            patterns.append(
                PatternRecommendation(
                    pattern_id=row["pattern_id"],
                    score=row.get("score"),
                    matched_attributes=tuple(row.get("matched_attributes", ())),
                    excluded_reason=row.get("excluded_reason"),
                    conflicts_with=tuple(row.get("conflicts_with", ())),
                )
            )
    return RecommendationReport(
        conflicts=ConflictReport(violations=()),
        ranking=ranking,
        patterns=patterns,
    )
