"""Loading, strict parsing, and canonical serialization of the knowledge base.

A KB root directory holds five UTF-8 JSON documents: attributes.json,
blockchains.json, patterns.json, conflict_rules.json, assets.json. Parsing is
strict: unknown fields, wrong types, and version mismatches are errors.
Asset bodies may live inline ("body") or in a sibling file ("body_file",
relative to the KB root).
"""

from __future__ import annotations

from pathlib import Path

from ..blade.levels import LEVEL_LABELS, parse_level_label
from ..errors import DocumentParseError, MissingFileError, ValidationFailedError
from ..jsonio import canonical_json, read_json_document
from .linter import validate_knowledge_base
from .model import (
    AttributeDefinition,
    BlockchainDescriptor,
    ConflictRule,
    CoreAsset,
    KnowledgeBase,
    PatternDescriptor,
)

DOCUMENT_NAMES = ("attributes", "blockchains", "patterns", "conflict_rules", "assets")


def load_knowledge_base(root_path: str | Path) -> KnowledgeBase:
    """Parse and validate a KB directory.

    Raises MissingFileError / DocumentParseError on structural problems and
    ValidationFailedError (wrapping the linter report) on invariant
    violations. One-directional pattern conflicts are only a warning and are
    symmetrized in the returned KB.
    """
    root = Path(root_path)
    docs = {}
    for name in DOCUMENT_NAMES:
        path = root / f"{name}.json"
        if not path.is_file():
            raise MissingFileError(name)
        docs[name] = read_json_document(path)

    kb = parse_knowledge_base(docs, root)
    report = validate_knowledge_base(kb)
    if not report.ok:
        raise ValidationFailedError(report)
    return _symmetrize_conflicts(kb)


def parse_knowledge_base(docs: dict[str, dict], root: Path | None = None) -> KnowledgeBase:
    """Build a KnowledgeBase from the five parsed documents (strict)."""
    versions = {}
    for name in DOCUMENT_NAMES:
        doc = docs[name]
        file = f"{name}.json"
        _check_keys(doc, {"version", name}, file)
        versions[name] = _get(doc, "version", str, file)
    version = versions["attributes"]
    for name, value in versions.items():
        if value != version:
            raise DocumentParseError(
                f"{name}.json", f"version {value!r} does not match attributes.json version {version!r}"
            )

    attributes = tuple(
        _parse_attribute(item, "attributes.json") for item in _get(docs["attributes"], "attributes", list, "attributes.json")
    )
    blockchains = tuple(
        _parse_blockchain(item, "blockchains.json") for item in _get(docs["blockchains"], "blockchains", list, "blockchains.json")
    )
    patterns = tuple(
        _parse_pattern(item, "patterns.json") for item in _get(docs["patterns"], "patterns", list, "patterns.json")
    )
    rules = tuple(
        _parse_conflict_rule(item, "conflict_rules.json") for item in _get(docs["conflict_rules"], "conflict_rules", list, "conflict_rules.json")
    )
    assets = tuple(
        _parse_asset(item, "assets.json", root) for item in _get(docs["assets"], "assets", list, "assets.json")
    )
    return KnowledgeBase(
        attributes=attributes,
        blockchains=blockchains,
        patterns=patterns,
        conflict_rules=rules,
        assets=assets,
        version=version,
    )


def attribute_payload(attr: AttributeDefinition) -> dict:
    return {
        "id": attr.id,
        "name": attr.name,
        "description": attr.description,
        "direction": attr.direction,
        "scale_min": attr.scale_min,
        "scale_max": attr.scale_max,
    }


def blockchain_payload(chain: BlockchainDescriptor, attribute_order) -> dict:
    ordered = [a for a in attribute_order if a in chain.scores]
    extra = sorted(set(chain.scores) - set(ordered))
    return {
        "id": chain.id,
        "name": chain.name,
        "governance": chain.governance,
        "scores": {a: chain.scores[a] for a in (*ordered, *extra)},
        "capabilities": sorted(chain.capabilities),
    }


def pattern_payload(pattern: PatternDescriptor) -> dict:
    return {
        "id": pattern.id,
        "name": pattern.name,
        "category": pattern.category,
        "intent": pattern.intent,
        "addresses": sorted(pattern.addresses),
        "requires_capabilities": sorted(pattern.requires_capabilities),
        "conflicts_with": sorted(pattern.conflicts_with),
        "variant_of": pattern.variant_of,
    }


def conflict_rule_payload(rule: ConflictRule) -> dict:
    return {
        "left": rule.left,
        "right": rule.right,
        "threshold": LEVEL_LABELS[rule.threshold],
        "explanation": rule.explanation,
    }


def serialize_knowledge_base(kb: KnowledgeBase) -> dict[str, str]:
    """Canonical text of the five documents, keyed by file name."""
    order = kb.attribute_ids
    return {
        "attributes.json": canonical_json(
            {"version": kb.version, "attributes": [attribute_payload(a) for a in kb.attributes]}
        ),
        "blockchains.json": canonical_json(
            {"version": kb.version, "blockchains": [blockchain_payload(b, order) for b in kb.blockchains]}
        ),
        "patterns.json": canonical_json(
            {"version": kb.version, "patterns": [pattern_payload(p) for p in kb.patterns]}
        ),
        "conflict_rules.json": canonical_json(
            {"version": kb.version, "conflict_rules": [conflict_rule_payload(r) for r in kb.conflict_rules]}
        ),
        "assets.json": canonical_json(
            {
                "version": kb.version,
                "assets": [
                    {
                        "id": a.id,
                        "kind": a.kind,
                        "activating_features": sorted(a.activating_features),
                        "output_path_template": a.output_path_template,
                        "body": a.body,
                    }
                    for a in kb.assets
                ],
            }
        ),
    }


def _symmetrize_conflicts(kb: KnowledgeBase) -> KnowledgeBase:
    conflict_map: dict[str, set[str]] = {p.id: set(p.conflicts_with) for p in kb.patterns}
    for pattern_id, others in list(conflict_map.items()):
        for other in others:
            if other in conflict_map:
                conflict_map[other].add(pattern_id)
    patterns = tuple(
        PatternDescriptor(
            id=p.id,
            name=p.name,
            category=p.category,
            intent=p.intent,
            addresses=p.addresses,
            requires_capabilities=p.requires_capabilities,
            conflicts_with=frozenset(conflict_map[p.id]),
            variant_of=p.variant_of,
        )
        for p in kb.patterns
    )
    return KnowledgeBase(
        attributes=kb.attributes,
        blockchains=kb.blockchains,
        patterns=patterns,
        conflict_rules=kb.conflict_rules,
        assets=kb.assets,
        version=kb.version,
    )


# --- strict field access ----------------------------------------------------

def _check_keys(obj: dict, allowed: set[str], file: str, where: str = "") -> None:
    unknown = sorted(set(obj) - allowed)
    if unknown:
        prefix = f"{where}: " if where else ""
        raise DocumentParseError(file, f"{prefix}unknown field(s): {', '.join(unknown)}")


def _get(obj: dict, key: str, kind, file: str, where: str = ""):
    prefix = f"{where}: " if where else ""
    if key not in obj:
        raise DocumentParseError(file, f"{prefix}missing field {key!r}")
    value = obj[key]
    if kind is int and isinstance(value, bool):
        raise DocumentParseError(file, f"{prefix}field {key!r} must be an integer")
    if not isinstance(value, kind):
        raise DocumentParseError(file, f"{prefix}field {key!r} has the wrong type")
    return value


def _string_list(obj: dict, key: str, file: str, where: str) -> list[str]:
    values = _get(obj, key, list, file, where)
    for value in values:
        if not isinstance(value, str):
            raise DocumentParseError(file, f"{where}: field {key!r} must contain only strings")
    return values


def _parse_attribute(item: dict, file: str) -> AttributeDefinition:
    if not isinstance(item, dict):
        raise DocumentParseError(file, "attribute entries must be objects")
    where = f"attribute {item.get('id', '?')!r}"
    _check_keys(item, {"id", "name", "description", "direction", "scale_min", "scale_max"}, file, where)
    return AttributeDefinition(
        id=_get(item, "id", str, file, where),
        name=_get(item, "name", str, file, where),
        description=_get(item, "description", str, file, where),
        direction=_get(item, "direction", str, file, where),
        scale_min=_get(item, "scale_min", int, file, where),
        scale_max=_get(item, "scale_max", int, file, where),
    )


def _parse_blockchain(item: dict, file: str) -> BlockchainDescriptor:
    if not isinstance(item, dict):
        raise DocumentParseError(file, "blockchain entries must be objects")
    where = f"blockchain {item.get('id', '?')!r}"
    _check_keys(item, {"id", "name", "governance", "scores", "capabilities"}, file, where)
    scores = _get(item, "scores", dict, file, where)
    for attr_id, score in scores.items():
        if not isinstance(score, int) or isinstance(score, bool):
            raise DocumentParseError(file, f"{where}: score for {attr_id!r} must be an integer")
    return BlockchainDescriptor(
        id=_get(item, "id", str, file, where),
        name=_get(item, "name", str, file, where),
        governance=_get(item, "governance", str, file, where),
        scores=dict(scores),
        capabilities=frozenset(_string_list(item, "capabilities", file, where)),
    )


def _parse_pattern(item: dict, file: str) -> PatternDescriptor:
    if not isinstance(item, dict):
        raise DocumentParseError(file, "pattern entries must be objects")
    where = f"pattern {item.get('id', '?')!r}"
    _check_keys(
        item,
        {"id", "name", "category", "intent", "addresses", "requires_capabilities", "conflicts_with", "variant_of"},
        file,
        where,
    )
    variant_of = item.get("variant_of")
    if variant_of is not None and not isinstance(variant_of, str):
        raise DocumentParseError(file, f"{where}: field 'variant_of' must be a string or null")
    return PatternDescriptor(
        id=_get(item, "id", str, file, where),
        name=_get(item, "name", str, file, where),
        category=_get(item, "category", str, file, where),
        intent=_get(item, "intent", str, file, where),
        addresses=frozenset(_string_list(item, "addresses", file, where)),
        requires_capabilities=frozenset(_string_list(item, "requires_capabilities", file, where)),
        conflicts_with=frozenset(_string_list(item, "conflicts_with", file, where)),
        variant_of=variant_of,
    )


def _parse_conflict_rule(item: dict, file: str) -> ConflictRule:
    if not isinstance(item, dict):
        raise DocumentParseError(file, "conflict rule entries must be objects")
    where = f"conflict rule {item.get('left', '?')!r}/{item.get('right', '?')!r}"
    _check_keys(item, {"left", "right", "threshold", "explanation"}, file, where)
    label = _get(item, "threshold", str, file, where)
    try:
        threshold = parse_level_label(label)
    except ValueError as exc:
        raise DocumentParseError(file, f"{where}: {exc}")
    return ConflictRule(
        left=_get(item, "left", str, file, where),
        right=_get(item, "right", str, file, where),
        threshold=int(threshold),
        explanation=_get(item, "explanation", str, file, where),
    )


def _parse_asset(item: dict, file: str, root: Path | None) -> CoreAsset:
    if not isinstance(item, dict):
        raise DocumentParseError(file, "asset entries must be objects")
    where = f"asset {item.get('id', '?')!r}"
    _check_keys(item, {"id", "kind", "activating_features", "output_path_template", "body", "body_file"}, file, where)
    has_body = "body" in item
    has_body_file = "body_file" in item
    if has_body == has_body_file:
        raise DocumentParseError(file, f"{where}: exactly one of 'body' or 'body_file' is required")
    if has_body:
        body = _get(item, "body", str, file, where)
    else:
        rel = _get(item, "body_file", str, file, where)
        segments = rel.replace("\\", "/").split("/")
        if rel.startswith("/") or any(seg in ("", ".", "..") for seg in segments):
            raise DocumentParseError(file, f"{where}: body_file path escape: {rel!r}")
        if root is None:
            raise DocumentParseError(file, f"{where}: body_file requires loading from a directory")
        body_path = Path(root) / rel
        if not body_path.is_file():
            raise DocumentParseError(file, f"{where}: body_file not found: {rel!r}")
        body = body_path.read_text(encoding="utf-8")
    return CoreAsset(
        id=_get(item, "id", str, file, where),
        kind=_get(item, "kind", str, file, where),
        activating_features=frozenset(_string_list(item, "activating_features", file, where)),
        output_path_template=_get(item, "output_path_template", str, file, where),
        body=body,
    )
