"""Configurations over a feature model: validation, completion, enumeration.

A configuration is a partial assignment (selected / deselected / open).
Validation reports only the violations already forced by decided features;
completion runs unit propagation to a fixpoint and never makes a free
choice; enumeration lists every complete valid configuration and is the
reference semantics the propagator is tested against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import (
    ContradictionError,
    ExceededLimitError,
    InvalidRequestError,
    MissingRankingError,
    UnknownFeatureError,
    UnmappedBlockchainError,
)
from .features import FeatureModel

STATUS_VALID = "valid"
STATUS_INVALID = "invalid"
STATUS_INCOMPLETE = "incomplete"

ENUMERATION_FEATURE_GUARD = 25


@dataclass(frozen=True)
class Configuration:
    selected: frozenset[str]
    deselected: frozenset[str]

    def __post_init__(self):
        overlap = self.selected & self.deselected
        if overlap:
            raise InvalidRequestError(
                f"feature(s) both selected and deselected: {', '.join(sorted(overlap))}"
            )

    def open_features(self, model: FeatureModel) -> tuple[str, ...]:
        decided = self.selected | self.deselected
        return tuple(f for f in model.feature_ids() if f not in decided)

    def is_complete(self, model: FeatureModel) -> bool:
        return not self.open_features(model)

    def to_payload(self, model: FeatureModel | None = None) -> dict:
        payload = {
            "selected": sorted(self.selected),
            "deselected": sorted(self.deselected),
        }
        if model is not None:
            payload["open"] = sorted(self.open_features(model))
        return payload


def parse_configuration(doc: dict) -> Configuration:
    if not isinstance(doc, dict):
        raise InvalidRequestError("configuration must be a JSON object")
    unknown = sorted(set(doc) - {"selected", "deselected", "open"})
    if unknown:
        raise InvalidRequestError(f"configuration: unknown field(s): {', '.join(unknown)}")
    for key in ("selected", "deselected"):
        values = doc.get(key, [])
        if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
            raise InvalidRequestError(f"configuration: '{key}' must be a list of feature ids")
    return Configuration(
        selected=frozenset(doc.get("selected", [])),
        deselected=frozenset(doc.get("deselected", [])),
    )


@dataclass(frozen=True)
class RuleViolation:
    rule: str  # tree rule or constraint kind
    features: tuple[str, ...]
    message: str

    def to_payload(self) -> dict:
        return {"rule": self.rule, "features": list(self.features), "message": self.message}


@dataclass(frozen=True)
class ValidityReport:
    status: str
    violations: tuple[RuleViolation, ...]
    open: tuple[str, ...]

    def to_payload(self) -> dict:
        return {
            "status": self.status,
            "violations": [v.to_payload() for v in self.violations],
            "open": list(self.open),
        }


def _check_known(config: Configuration, model: FeatureModel) -> None:
    known = set(model.feature_ids())
    for feature_id in sorted((config.selected | config.deselected) - known):
        raise UnknownFeatureError(feature_id)


def validate_configuration(config: Configuration, model: FeatureModel) -> ValidityReport:
    """Check the tree rules and cross-tree constraints.

    Only contradictions on decided features count as violations: a rule that
    could still be satisfied by deciding open features keeps the status at
    incomplete. Valid therefore means no violations and nothing open.
    """
    _check_known(config, model)
    sel, des = config.selected, config.deselected
    violations: list[RuleViolation] = []

    root = model.root
    if root.id in des:
        violations.append(RuleViolation("root", (root.id,), f"root feature {root.id!r} must be selected"))

    for feature in model.features:
        if feature.parent is None:
            continue
        if feature.id in sel and feature.parent in des:
            violations.append(
                RuleViolation(
                    "parent-of-selected",
                    (feature.id, feature.parent),
                    f"{feature.id!r} is selected but its parent {feature.parent!r} is deselected",
                )
            )
        if feature.mandatory and feature.parent in sel and feature.id in des:
            violations.append(
                RuleViolation(
                    "mandatory-child",
                    (feature.parent, feature.id),
                    f"mandatory child {feature.id!r} of selected {feature.parent!r} is deselected",
                )
            )

    for feature in model.features:
        if feature.group == "none":
            continue
        children = model.children_of(feature.id)
        chosen = [c for c in children if c in sel]
        undecided = [c for c in children if c not in sel and c not in des]
        if feature.group == "xor":
            if len(chosen) > 1:
                violations.append(
                    RuleViolation(
                        "xor-group",
                        (feature.id, *chosen),
                        f"xor group {feature.id!r} has {len(chosen)} selected children",
                    )
                )
            elif feature.id in sel and not chosen and not undecided:
                violations.append(
                    RuleViolation(
                        "xor-group",
                        (feature.id, *children),
                        f"xor group {feature.id!r} is selected but no child is",
                    )
                )
        else:  # or
            if feature.id in sel and not chosen and not undecided:
                violations.append(
                    RuleViolation(
                        "or-group",
                        (feature.id, *children),
                        f"or group {feature.id!r} is selected but no child is",
                    )
                )

    for constraint in model.constraints:
        a, b = constraint.from_feature, constraint.to_feature
        if constraint.kind == "requires":
            if a in sel and b in des:
                violations.append(
                    RuleViolation("requires", (a, b), f"{a!r} requires {b!r}, which is deselected")
                )
        else:  # excludes
            if a in sel and b in sel:
                violations.append(
                    RuleViolation("excludes", (a, b), f"{a!r} and {b!r} exclude each other")
                )

    open_features = config.open_features(model)
    if violations:
        status = STATUS_INVALID
    elif open_features:
        status = STATUS_INCOMPLETE
    else:
        status = STATUS_VALID
    return ValidityReport(status=status, violations=tuple(violations), open=open_features)


def complete_configuration(partial: Configuration, model: FeatureModel) -> Configuration:
    """Propagate every forced decision to a fixpoint.

    Unit rules only: tree closure (selected child forces its parent, a
    deselected parent its subtree, mandatory children of selected parents),
    xor/or groups (siblings of a selected xor child drop out, a last
    remaining candidate is forced in), and requires/excludes with their
    contrapositives. Free choices stay open; forcing a feature both ways
    raises ContradictionError.
    """
    _check_known(partial, model)
    sel = set(partial.selected)
    des = set(partial.deselected)

    def select(feature_id: str):
        if feature_id in des:
            raise ContradictionError([feature_id])
        if feature_id not in sel:
            sel.add(feature_id)
            return True
        return False

    def deselect(feature_id: str):
        if feature_id in sel:
            raise ContradictionError([feature_id])
        if feature_id not in des:
            des.add(feature_id)
            return True
        return False

    select(model.root.id)
    changed = True
    while changed:
        changed = False
        for feature in model.features:
            parent = feature.parent
            if parent is not None:
                if feature.id in sel and parent not in sel:
                    changed |= select(parent)
                if parent in des and feature.id not in des:
                    changed |= deselect(feature.id)
                if feature.mandatory:
                    if parent in sel and feature.id not in sel:
                        changed |= select(feature.id)
                    if feature.id in des and parent not in des:
                        changed |= deselect(parent)

        for feature in model.features:
            if feature.group == "none":
                continue
            children = model.children_of(feature.id)
            chosen = [c for c in children if c in sel]
            undecided = [c for c in children if c not in sel and c not in des]
            if feature.group == "xor":
                if chosen:
                    keeper = chosen[0]
                    for other in children:
                        if other != keeper and other not in des:
                            changed |= deselect(other)
                elif feature.id in sel:
                    if len(undecided) == 1:
                        changed |= select(undecided[0])
                    elif not undecided:
                        raise ContradictionError(
                            [feature.id, *children],
                            f"xor group {feature.id!r} has no selectable child left",
                        )
            else:  # or
                if feature.id in sel and not chosen:
                    if len(undecided) == 1:
                        changed |= select(undecided[0])
                    elif not undecided:
                        raise ContradictionError(
                            [feature.id, *children],
                            f"or group {feature.id!r} has no selectable child left",
                        )

        for constraint in model.constraints:
            a, b = constraint.from_feature, constraint.to_feature
            if constraint.kind == "requires":
                if a in sel and b not in sel:
                    changed |= select(b)
                if b in des and a not in des:
                    changed |= deselect(a)
            else:  # excludes
                if a in sel and b not in des:
                    changed |= deselect(b)
                if b in sel and a not in des:
                    changed |= deselect(a)

    return Configuration(selected=frozenset(sel), deselected=frozenset(des))


def enumerate_configurations(model: FeatureModel, limit: int = 10_000) -> list[Configuration]:
    """Every complete valid configuration, at most ``limit`` of them.

    Walks the tree so structurally impossible assignments are never built,
    then filters by the cross-tree constraints. Models beyond the feature
    guard or result sets beyond ``limit`` raise ExceededLimitError.
    """
    feature_ids = model.feature_ids()
    if len(feature_ids) > ENUMERATION_FEATURE_GUARD:
        raise ExceededLimitError(
            f"model has {len(feature_ids)} features, enumeration is capped at {ENUMERATION_FEATURE_GUARD}"
        )

    results: list[Configuration] = []
    for selected in _subtree_selections(model, model.root.id):
        if not _constraints_hold(model, selected):
            continue
        config = Configuration(
            selected=frozenset(selected),
            deselected=frozenset(set(feature_ids) - selected),
        )
        results.append(config)
        if len(results) > limit:
            raise ExceededLimitError(f"more than {limit} valid configurations")

    results.sort(key=lambda c: tuple(sorted(c.selected)))
    return results


def _subtree_selections(model: FeatureModel, feature_id: str):
    """Yield the selected-feature sets of all valid subtrees rooted here,
    assuming ``feature_id`` itself is selected."""
    children = model.children_of(feature_id)
    group = model.feature(feature_id).group

    child_options: list[list[set[str]]] = []
    if group == "none":
        for child_id in children:
            options = list(_subtree_selections(model, child_id))
            if model.feature(child_id).mandatory:
                child_options.append(options)
            else:
                child_options.append([set()] + options)
    else:
        combos: list[set[str]] = []
        per_child = {c: list(_subtree_selections(model, c)) for c in children}
        sizes = [1] if group == "xor" else range(1, len(children) + 1)
        for size in sizes:
            for picked in itertools.combinations(children, size):
                for parts in itertools.product(*(per_child[c] for c in picked)):
                    merged: set[str] = set()
                    for part in parts:
                        merged |= part
                    combos.append(merged)
        child_options = [combos]

    for parts in itertools.product(*child_options):
        merged = {feature_id}
        for part in parts:
            merged |= part
        yield merged


def _constraints_hold(model: FeatureModel, selected: set[str]) -> bool:
    for constraint in model.constraints:
        a, b = constraint.from_feature, constraint.to_feature
        if constraint.kind == "requires":
            if a in selected and b not in selected:
                return False
        else:
            if a in selected and b in selected:
                return False
    return True


def preselect_from_recommendation(report, model: FeatureModel) -> Configuration:
    """Turn a recommendation into an initial feature selection.

    Picks the feature mapped to the top-ranked blockchain plus the features
    of every positively scored pattern that has a mapping; everything else
    stays open for the architect.
    """
    ranking = getattr(report, "ranking", None)
    if ranking is None or not ranking.entries:
        raise MissingRankingError()
    top = ranking.entries[0].blockchain_id
    if top not in model.blockchain_feature_map:
        raise UnmappedBlockchainError(top)

    selected = {model.blockchain_feature_map[top]}
    for pattern in report.patterns or []:
        if pattern.excluded_reason is None and pattern.score and pattern.score > 0:
            feature_id = model.pattern_feature_map.get(pattern.pattern_id)
            if feature_id is not None:
                selected.add(feature_id)
    return Configuration(selected=frozenset(selected), deselected=frozenset())
