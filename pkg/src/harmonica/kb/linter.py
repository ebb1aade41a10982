"""Knowledge base validation.

``validate_knowledge_base`` never raises; it returns a report whose error
entries block engine use (the loader wraps them in ValidationFailedError).
Every message names the offending entity id so authors can find it.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..banco.templates import parse_template
from ..errors import HarmonicaError
from .model import (
    ASSET_KINDS,
    DIRECTIONS,
    GOVERNANCE_KINDS,
    KEBAB_CASE,
    KnowledgeBase,
)

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class ValidationIssue:
    severity: str
    location: str
    message: str

    def to_payload(self) -> dict:
        return {"severity": self.severity, "location": self.location, "message": self.message}


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[ValidationIssue, ...]

    @property
    def errors(self) -> tuple[ValidationIssue, ...]:
        return tuple(i for i in self.issues if i.severity == ERROR)

    @property
    def warnings(self) -> tuple[ValidationIssue, ...]:
        return tuple(i for i in self.issues if i.severity == WARNING)

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_payload(self) -> dict:
        return {
            "ok": self.ok,
            "error_count": len(self.errors),
            "warning_count": len(self.warnings),
            "issues": [i.to_payload() for i in self.issues],
        }


class _Collector:
    def __init__(self):
        self.issues: list[ValidationIssue] = []

    def error(self, location: str, message: str):
        self.issues.append(ValidationIssue(ERROR, location, message))

    def warning(self, location: str, message: str):
        self.issues.append(ValidationIssue(WARNING, location, message))


def validate_knowledge_base(kb: KnowledgeBase, model=None) -> ValidationReport:
    """Check every type invariant; returns a report instead of raising.

    When a feature model is supplied, assets whose activating features do not
    all exist in the model are flagged as unused (warning): no configuration
    can ever activate them.
    """
    out = _Collector()
    _check_attributes(kb, out)
    _check_blockchains(kb, out)
    _check_patterns(kb, out)
    _check_conflict_rules(kb, out)
    _check_assets(kb, out, model)
    return ValidationReport(tuple(out.issues))


def _check_duplicates(ids, location, out):
    seen = set()
    for entity_id in ids:
        if entity_id in seen:
            out.error(location, f"duplicate id {entity_id!r}")
        seen.add(entity_id)


def _check_id_shape(entity_id, location, out):
    if not entity_id or not KEBAB_CASE.match(entity_id):
        out.error(location, f"id {entity_id!r} is not lowercase kebab-case")


def _check_attributes(kb, out):
    _check_duplicates(kb.attribute_ids, "attributes", out)
    for attr in kb.attributes:
        where = f"attributes/{attr.id}"
        _check_id_shape(attr.id, where, out)
        if not attr.name.strip():
            out.error(where, f"attribute {attr.id!r} has an empty name")
        if attr.direction not in DIRECTIONS:
            out.error(where, f"attribute {attr.id!r} has unknown direction {attr.direction!r}")
        if attr.scale_min >= attr.scale_max:
            out.error(where, f"attribute {attr.id!r}: scale_min must be below scale_max")


def _check_blockchains(kb, out):
    catalog = {a.id: a for a in kb.attributes}
    _check_duplicates((b.id for b in kb.blockchains), "blockchains", out)
    for chain in kb.blockchains:
        where = f"blockchains/{chain.id}"
        _check_id_shape(chain.id, where, out)
        if chain.governance not in GOVERNANCE_KINDS:
            out.error(where, f"blockchain {chain.id!r} has unknown governance {chain.governance!r}")
        for attr_id in catalog:
            if attr_id not in chain.scores:
                out.error(where, f"blockchain {chain.id!r} is missing a score for {attr_id!r}")
        for attr_id, score in chain.scores.items():
            attr = catalog.get(attr_id)
            if attr is None:
                out.error(where, f"blockchain {chain.id!r} scores unknown attribute {attr_id!r}")
            elif not attr.in_scale(score):
                out.error(
                    where,
                    f"blockchain {chain.id!r}: score out of scale for {attr_id!r} "
                    f"({score} not in [{attr.scale_min}, {attr.scale_max}])",
                )


def _check_patterns(kb, out):
    known_patterns = {p.id for p in kb.patterns}
    known_attributes = set(kb.attribute_ids)
    _check_duplicates((p.id for p in kb.patterns), "patterns", out)
    by_id = {p.id: p for p in kb.patterns}

    for pattern in kb.patterns:
        where = f"patterns/{pattern.id}"
        _check_id_shape(pattern.id, where, out)
        for attr_id in sorted(pattern.addresses):
            if attr_id not in known_attributes:
                out.error(where, f"pattern {pattern.id!r}: unresolved attribute reference {attr_id!r}")
        for other in sorted(pattern.conflicts_with):
            if other == pattern.id:
                out.error(where, f"pattern {pattern.id!r} conflicts with itself")
            elif other not in known_patterns:
                out.error(where, f"pattern {pattern.id!r}: unresolved pattern reference {other!r}")
            elif pattern.id not in by_id[other].conflicts_with:
                out.warning(
                    where,
                    f"pattern {pattern.id!r} conflicts with {other!r} but not vice versa; "
                    "treated as symmetric",
                )
        if pattern.variant_of is not None and pattern.variant_of not in known_patterns:
            out.error(where, f"pattern {pattern.id!r}: unresolved pattern reference {pattern.variant_of!r}")

    # variant_of chains must terminate
    for pattern in kb.patterns:
        seen = {pattern.id}
        cursor = pattern.variant_of
        while cursor is not None and cursor in by_id:
            if cursor in seen:
                out.error(f"patterns/{pattern.id}", f"variant_of cycle through {pattern.id!r}")
                break
            seen.add(cursor)
            cursor = by_id[cursor].variant_of


def _check_conflict_rules(kb, out):
    known_attributes = set(kb.attribute_ids)
    seen_pairs = set()
    for rule in kb.conflict_rules:
        where = f"conflict_rules/{rule.left}--{rule.right}"
        if rule.left == rule.right:
            out.error(where, f"conflict rule pairs {rule.left!r} with itself")
        for attr_id in (rule.left, rule.right):
            if attr_id not in known_attributes:
                out.error(where, f"conflict rule references unknown attribute {attr_id!r}")
        pair = rule.pair()
        if pair in seen_pairs:
            out.error(where, f"duplicate conflict rule for pair {rule.left!r}/{rule.right!r}")
        seen_pairs.add(pair)


def _check_assets(kb, out, model):
    _check_duplicates((a.id for a in kb.assets), "assets", out)
    model_features = {f.id for f in model.features} if model is not None else None
    for asset in kb.assets:
        where = f"assets/{asset.id}"
        _check_id_shape(asset.id, where, out)
        if asset.kind not in ASSET_KINDS:
            out.error(where, f"asset {asset.id!r} has unknown kind {asset.kind!r}")
        _check_output_path(asset, where, out)
        try:
            parse_template(asset.body)
        except HarmonicaError as exc:
            out.error(where, f"asset {asset.id!r} body does not parse: {exc.message}")
        if model_features is not None:
            missing = sorted(set(asset.activating_features) - model_features)
            if missing:
                out.warning(
                    where,
                    f"asset {asset.id!r} is unused: activating features {missing} "
                    "do not exist in the feature model",
                )


def _check_output_path(asset, where, out):
    path = asset.output_path_template
    if not path or path.startswith("/") or path.startswith("\\"):
        out.error(where, f"asset {asset.id!r}: path escape in output path {path!r}")
        return
    segments = path.replace("\\", "/").split("/")
    if any(seg in ("", ".", "..") for seg in segments):
        out.error(where, f"asset {asset.id!r}: path escape in output path {path!r}")
