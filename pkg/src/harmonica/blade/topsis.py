"""TOPSIS ranking over a decision matrix.

The classical variant: vector normalization, weighted values, Euclidean
distances to the ideal and anti-ideal points, closeness coefficient
C_i = d- / (d+ + d-). Degenerate rules are fixed here once and mirrored by
the test oracle: an all-zero column normalizes to zeros, and d+ + d- = 0
yields closeness 0.5. Entries sort by closeness descending with the id as
tie-break; the sort key snaps closeness to 12 decimals so structural ties
are not scrambled by float noise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyMatrixError, NotRankedError, WeightMismatchError

SORT_DECIMALS = 12


@dataclass(frozen=True)
class Criterion:
    attribute_id: str
    direction: str  # "benefit" or "cost"


@dataclass(frozen=True)
class WeightVector:
    """Normalized positive weights over the active criteria."""

    weights: dict[str, float]

    def __post_init__(self):
        if self.weights:
            total = sum(self.weights.values())
            if abs(total - 1.0) > 1e-12:
                raise WeightMismatchError(f"weights sum to {total!r}, expected 1.0")
            if any(w <= 0.0 for w in self.weights.values()):
                raise WeightMismatchError("weights must be strictly positive")

    def to_payload(self) -> dict:
        return {"weights": dict(self.weights)}


@dataclass(frozen=True)
class DecisionMatrix:
    """Alternatives x criteria score matrix.

    Values are floats so that derived matrices (for example a column scaled
    by a constant) stay representable; matrices built from the knowledge
    base carry the raw 1..5 ordinal scores.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[Criterion, ...]
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (len(self.alternatives), len(self.criteria)):
            raise EmptyMatrixError(
                f"matrix shape {values.shape} does not match "
                f"{len(self.alternatives)} alternatives x {len(self.criteria)} criteria"
            )
        object.__setattr__(self, "values", values)

    @classmethod
    def from_kb(cls, kb, blockchain_ids, attribute_ids) -> "DecisionMatrix":
        criteria = tuple(Criterion(a, kb.attribute(a).direction) for a in attribute_ids)
        rows = []
        for blockchain_id in blockchain_ids:
            chain = kb.blockchain(blockchain_id)
            rows.append([chain.scores[c.attribute_id] for c in criteria])
        values = np.array(rows, dtype=float).reshape(len(blockchain_ids), len(criteria))
        return cls(tuple(blockchain_ids), criteria, values)


@dataclass(frozen=True)
class Contribution:
    """One criterion's share of an alternative's distance to the poles."""

    attribute_id: str
    weighted_value: float
    ideal_gap: float
    anti_ideal_gap: float

    def to_payload(self) -> dict:
        return {
            "weighted_value": self.weighted_value,
            "ideal_gap": self.ideal_gap,
            "anti_ideal_gap": self.anti_ideal_gap,
        }


@dataclass(frozen=True)
class RankingEntry:
    blockchain_id: str
    closeness: float
    d_plus: float
    d_minus: float
    contributions: tuple[Contribution, ...]

    def to_payload(self) -> dict:
        return {
            "blockchain_id": self.blockchain_id,
            "closeness": self.closeness,
            "d_plus": self.d_plus,
            "d_minus": self.d_minus,
            "per_criterion_contribution": {
                c.attribute_id: c.to_payload() for c in self.contributions
            },
        }


@dataclass(frozen=True)
class DisqualificationRecord:
    blockchain_id: str
    attribute_id: str
    actual_score: int
    min_level: int

    def to_payload(self) -> dict:
        return {
            "blockchain_id": self.blockchain_id,
            "attribute_id": self.attribute_id,
            "actual_score": self.actual_score,
            "min_level": self.min_level,
        }


@dataclass(frozen=True)
class Ranking:
    entries: tuple[RankingEntry, ...]
    disqualified: tuple[DisqualificationRecord, ...]

    def entry(self, blockchain_id: str) -> RankingEntry:
        for entry in self.entries:
            if entry.blockchain_id == blockchain_id:
                return entry
        raise NotRankedError(blockchain_id)

    def to_payload(self) -> dict:
        return {
            "entries": [e.to_payload() for e in self.entries],
            "disqualified": [d.to_payload() for d in self.disqualified],
        }


def topsis_rank(matrix: DecisionMatrix, weights: WeightVector,
                disqualified: tuple[DisqualificationRecord, ...] = ()) -> Ranking:
    """Rank the matrix alternatives by TOPSIS closeness.

    Steps: (1) vector-normalize each column, (2) scale by weights, (3) take
    the per-column ideal (max for benefit, min for cost) and anti-ideal,
    (4) Euclidean distances d+ and d-, (5) closeness d-/(d+ + d-),
    (6) sort descending with id tie-break.
    """
    if not matrix.alternatives or not matrix.criteria:
        raise EmptyMatrixError("decision matrix needs at least one alternative and one criterion")
    criterion_ids = [c.attribute_id for c in matrix.criteria]
    if set(criterion_ids) != set(weights.weights):
        missing = sorted(set(criterion_ids) ^ set(weights.weights))
        raise WeightMismatchError(f"weights do not cover exactly the matrix criteria: {missing}")

    x = matrix.values
    norms = np.sqrt((x * x).sum(axis=0))
    r = np.divide(x, norms, out=np.zeros_like(x), where=norms > 0.0)

    w = np.array([weights.weights[c] for c in criterion_ids])
    v = r * w

    benefit = np.array([c.direction == "benefit" for c in matrix.criteria])
    col_max = v.max(axis=0)
    col_min = v.min(axis=0)
    ideal = np.where(benefit, col_max, col_min)
    anti_ideal = np.where(benefit, col_min, col_max)

    gaps_plus = np.abs(v - ideal)
    gaps_minus = np.abs(v - anti_ideal)
    d_plus = np.sqrt((gaps_plus**2).sum(axis=1))
    d_minus = np.sqrt((gaps_minus**2).sum(axis=1))

    denom = d_plus + d_minus
    closeness = np.where(denom > 0.0, np.divide(d_minus, denom, out=np.full_like(denom, 0.5), where=denom > 0.0), 0.5)

    entries = []
    for i, blockchain_id in enumerate(matrix.alternatives):
        contributions = tuple(
            Contribution(
                attribute_id=criterion_ids[j],
                weighted_value=float(v[i, j]),
                ideal_gap=float(gaps_plus[i, j]),
                anti_ideal_gap=float(gaps_minus[i, j]),
            )
            for j in range(len(criterion_ids))
        )
        entries.append(
            RankingEntry(
                blockchain_id=blockchain_id,
                closeness=float(closeness[i]),
                d_plus=float(d_plus[i]),
                d_minus=float(d_minus[i]),
                contributions=contributions,
            )
        )
    entries.sort(key=lambda e: (-round(e.closeness, SORT_DECIMALS), e.blockchain_id))
    return Ranking(entries=tuple(entries), disqualified=tuple(disqualified))


def explain(ranking: Ranking, blockchain_id: str) -> list[Contribution]:
    """Per-criterion contribution table for one ranked alternative.

    The squared ideal gaps sum to d+^2 (and anti-ideal gaps to d-^2), so the
    table is a faithful decomposition of the distances.
    """
    return list(ranking.entry(blockchain_id).contributions)
