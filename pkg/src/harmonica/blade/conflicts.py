"""Live dependency checking between requirement selections.

A conflict rule fires when both of its attributes are demanded at or above
the rule threshold. Severity is an error as soon as one side is a hard
requirement, otherwise a warning: two merely-desired attributes can still be
traded off, a hard requirement cannot. A required attribute counts at the
maximal level (see Requirement.effective_level), so marking one side
Required is always enough to trigger against a strongly-desired other side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .levels import LEVEL_LABELS, PreferenceLevel
from .profile import PreferenceProfile, Requirement

SEVERITY_ERROR = "error"
SEVERITY_WARNING = "warning"


@dataclass(frozen=True)
class ConflictViolation:
    rule: "ConflictRule"  # noqa: F821 (kb.model.ConflictRule; kept untyped to avoid the import cycle)
    left_requirement: Requirement
    right_requirement: Requirement
    severity: str

    def to_payload(self) -> dict:
        return {
            "rule": {
                "left": self.rule.left,
                "right": self.rule.right,
                "threshold": LEVEL_LABELS[self.rule.threshold],
                "explanation": self.rule.explanation,
            },
            "left": _requirement_payload(self.left_requirement),
            "right": _requirement_payload(self.right_requirement),
            "severity": self.severity,
        }


@dataclass(frozen=True)
class ConflictReport:
    violations: tuple[ConflictViolation, ...]

    @property
    def has_errors(self) -> bool:
        return any(v.severity == SEVERITY_ERROR for v in self.violations)

    def to_payload(self) -> dict:
        return {"violations": [v.to_payload() for v in self.violations]}


def _requirement_payload(req: Requirement) -> dict:
    return {
        "attribute_id": req.attribute_id,
        "level": LEVEL_LABELS[req.level],
        "required": req.required,
    }


def _triggers(req: Requirement, threshold: int) -> bool:
    """A side triggers when it is actively set at/above the threshold."""
    return req.active and req.effective_level >= threshold


def _evaluate_rule(rule, profile: PreferenceProfile) -> ConflictViolation | None:
    left = profile.get(rule.left)
    right = profile.get(rule.right)
    if not (_triggers(left, rule.threshold) and _triggers(right, rule.threshold)):
        return None
    severity = SEVERITY_ERROR if (left.required or right.required) else SEVERITY_WARNING
    return ConflictViolation(rule=rule, left_requirement=left, right_requirement=right, severity=severity)


def check_conflicts(profile: PreferenceProfile, kb) -> ConflictReport:
    """Evaluate every conflict rule against the profile.

    Symmetric in left/right by construction: both sides go through the same
    trigger predicate and severity only asks whether either is required.
    """
    profile.validate_against(kb)
    violations = []
    for rule in kb.conflict_rules:
        violation = _evaluate_rule(rule, profile)
        if violation is not None:
            violations.append(violation)
    return ConflictReport(tuple(violations))


def blocked_attributes(partial_profile: PreferenceProfile, kb) -> dict[str, list]:
    """Attributes that would cause an error-severity conflict if selected.

    For every attribute not yet actively set, simulate adding it at the rule
    threshold (not required) and collect the rules that would then fire as
    errors. The UI uses this map to disable selectors live.
    """
    partial_profile.validate_against(kb)
    blocked: dict[str, list] = {}
    for attribute_id in kb.attribute_ids:
        if partial_profile.is_active(attribute_id):
            continue
        triggering = []
        for rule in kb.conflict_rules:
            if attribute_id not in (rule.left, rule.right):
                continue
            simulated = partial_profile.with_requirement(
                Requirement(
                    attribute_id=attribute_id,
                    level=max(PreferenceLevel(rule.threshold), PreferenceLevel.SLIGHTLY_DESIRABLE),
                )
            )
            violation = _evaluate_rule(rule, simulated)
            if violation is not None and violation.severity == SEVERITY_ERROR:
                triggering.append(rule)
        if triggering:
            blocked[attribute_id] = triggering
    return blocked


def blocked_payload(blocked: dict[str, list]) -> dict:
    return {
        "blocked": {
            attribute_id: [
                {
                    "left": rule.left,
                    "right": rule.right,
                    "threshold": LEVEL_LABELS[rule.threshold],
                    "explanation": rule.explanation,
                }
                for rule in rules
            ]
            for attribute_id, rules in blocked.items()
        }
    }
