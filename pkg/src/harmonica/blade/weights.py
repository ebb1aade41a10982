"""From preference labels to TOPSIS weights, and hard-requirement screening."""

from __future__ import annotations

from ..errors import NoActiveCriteriaError
from .profile import PreferenceProfile
from .topsis import DisqualificationRecord, WeightVector


def derive_weights(profile: PreferenceProfile, kb) -> WeightVector:
    """Map preference levels to normalized weights.

    Raw weight is the level ordinal (0..4); a required attribute gets the
    maximal raw weight 4 whatever its stated level. Attributes with raw
    weight 0 are dropped from the active set entirely so an indifferent
    attribute can never influence the ranking.
    """
    profile.validate_against(kb)
    raw = {}
    for attribute_id in kb.attribute_ids:
        req = profile.get(attribute_id)
        value = int(req.effective_level)
        if value > 0:
            raw[attribute_id] = value
    total = sum(raw.values())
    if total == 0:
        raise NoActiveCriteriaError()
    return WeightVector({attribute_id: value / total for attribute_id, value in raw.items()})


def filter_required(profile: PreferenceProfile, kb):
    """Split blockchains into qualified and disqualified by required minima.

    A blockchain is disqualified iff some required attribute scores below
    its min_level; one record is emitted per failing attribute (catalog
    order) so reports can show every reason. Qualified ids keep KB order.
    """
    profile.validate_against(kb)
    required = profile.required_attributes(kb)
    qualified: list[str] = []
    disqualified: list[DisqualificationRecord] = []
    for chain in kb.blockchains:
        failures = [
            DisqualificationRecord(
                blockchain_id=chain.id,
                attribute_id=req.attribute_id,
                actual_score=chain.scores[req.attribute_id],
                min_level=req.min_level,
            )
            for req in required
            if chain.scores[req.attribute_id] < req.min_level
        ]
        if failures:
            disqualified.extend(failures)
        else:
            qualified.append(chain.id)
    return qualified, disqualified
