"""Rule-based pattern recommendation for a chosen blockchain.

First version: a pattern is compatible when the blockchain offers every
capability it needs; compatible patterns score by preference-weighted
coverage, the sum of the effective preference levels of the attributes they
address. Mutually conflicting patterns are both listed, each annotated with
the other, and the choice is left to the architect.
"""

from __future__ import annotations

from dataclasses import dataclass

from .profile import PreferenceProfile


@dataclass(frozen=True)
class PatternRecommendation:
    pattern_id: str
    score: int | None  # None iff excluded
    matched_attributes: tuple[str, ...]
    excluded_reason: str | None = None
    conflicts_with: tuple[str, ...] = ()

    def to_payload(self) -> dict:
        payload: dict = {"pattern_id": self.pattern_id}
        if self.excluded_reason is None:
            payload["score"] = self.score
            payload["matched_attributes"] = list(self.matched_attributes)
            payload["conflicts_with"] = list(self.conflicts_with)
        else:
            payload["excluded_reason"] = self.excluded_reason
        return payload


def recommend_patterns(profile: PreferenceProfile, blockchain, kb) -> list[PatternRecommendation]:
    """Score every KB pattern against the profile and one blockchain.

    Included patterns come first, sorted by score descending then id;
    excluded ones follow in id order, each with the reason.
    """
    active_levels = {
        req.attribute_id: int(req.effective_level) for req in profile.active_requirements(kb)
    }

    included = []
    excluded = []
    for pattern in kb.patterns:
        missing = sorted(pattern.requires_capabilities - blockchain.capabilities)
        if missing:
            excluded.append(
                PatternRecommendation(
                    pattern_id=pattern.id,
                    score=None,
                    matched_attributes=(),
                    excluded_reason=f"missing capability: {', '.join(missing)}",
                )
            )
            continue
        matched = sorted(a for a in pattern.addresses if a in active_levels)
        score = sum(active_levels[a] for a in matched)
        included.append((pattern, score, tuple(matched)))

    included_ids = {pattern.id for pattern, _, _ in included}
    recommendations = [
        PatternRecommendation(
            pattern_id=pattern.id,
            score=score,
            matched_attributes=matched,
            conflicts_with=tuple(sorted(pattern.conflicts_with & included_ids)),
        )
        for pattern, score, matched in included
    ]
    recommendations.sort(key=lambda r: (-r.score, r.pattern_id))
    excluded.sort(key=lambda r: r.pattern_id)
    return recommendations + excluded
