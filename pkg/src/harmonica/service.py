"""Document-in, payload-out operations shared by the CLI and the gateway.

Each function takes parsed JSON documents plus the immutable KB/model and
returns the response payload dict. Routing both surfaces through this module
is what makes `--json` CLI output and HTTP bodies byte-identical.
"""

from __future__ import annotations

import base64
from pathlib import Path
from tempfile import TemporaryDirectory

from .banco.configuration import (
    complete_configuration,
    parse_configuration,
    preselect_from_recommendation,
    validate_configuration,
)
from .banco.features import FeatureModel
from .banco.generator import product_archive, render_product, write_product_tree
from .blade.conflicts import blocked_attributes, blocked_payload, check_conflicts
from .blade.profile import parse_profile
from .blade.recommend import recommend, report_from_payload
from .errors import InvalidRequestError
from .kb.loader import attribute_payload, blockchain_payload, conflict_rule_payload, pattern_payload
from .kb.model import KnowledgeBase


def attributes_payload(kb: KnowledgeBase) -> dict:
    return {"version": kb.version, "attributes": [attribute_payload(a) for a in kb.attributes]}


def blockchains_payload(kb: KnowledgeBase) -> dict:
    return {
        "version": kb.version,
        "blockchains": [blockchain_payload(b, kb.attribute_ids) for b in kb.blockchains],
    }


def patterns_payload(kb: KnowledgeBase) -> dict:
    return {"version": kb.version, "patterns": [pattern_payload(p) for p in kb.patterns]}


def conflict_rules_payload(kb: KnowledgeBase) -> dict:
    return {"version": kb.version, "conflict_rules": [conflict_rule_payload(r) for r in kb.conflict_rules]}


def feature_model_payload(model: FeatureModel) -> dict:
    return model.to_payload()


def conflicts_op(profile_doc: dict, kb: KnowledgeBase) -> dict:
    profile = parse_profile(profile_doc)
    return check_conflicts(profile, kb).to_payload()


def blocked_op(profile_doc: dict, kb: KnowledgeBase) -> dict:
    profile = parse_profile(profile_doc)
    return blocked_payload(blocked_attributes(profile, kb))


def recommend_op(profile_doc: dict, kb: KnowledgeBase) -> dict:
    profile = parse_profile(profile_doc)
    return recommend(profile, kb).to_payload()


def preselect_op(report_doc: dict, model: FeatureModel) -> dict:
    report = report_from_payload(report_doc)
    config = preselect_from_recommendation(report, model)
    return config.to_payload(model)


def validate_op(config_doc: dict, model: FeatureModel) -> dict:
    config = parse_configuration(config_doc)
    return validate_configuration(config, model).to_payload()


def complete_op(config_doc: dict, model: FeatureModel) -> dict:
    config = parse_configuration(config_doc)
    return complete_configuration(config, model).to_payload(model)


def parse_generate_request(doc: dict) -> tuple[dict, dict[str, str]]:
    unknown = sorted(set(doc) - {"configuration", "variables"})
    if unknown:
        raise InvalidRequestError(f"generate request: unknown field(s): {', '.join(unknown)}")
    config_doc = doc.get("configuration")
    if not isinstance(config_doc, dict):
        raise InvalidRequestError("generate request: 'configuration' must be an object")
    variables = doc.get("variables", {})
    if not isinstance(variables, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in variables.items()
    ):
        raise InvalidRequestError("generate request: 'variables' must map strings to strings")
    return config_doc, dict(variables)


def generate_payload(manifest, files: dict[str, bytes]) -> dict:
    archive = product_archive(manifest, files)
    return {
        "manifest": manifest.to_payload(),
        "archive_base64": base64.b64encode(archive).decode("ascii"),
    }


def generate_op(doc: dict, model: FeatureModel, kb: KnowledgeBase) -> dict:
    """Render the product into a per-call temp directory, return manifest + zip."""
    config_doc, variables = parse_generate_request(doc)
    config = parse_configuration(config_doc)
    manifest, files = render_product(config, model, kb, variables)
    with TemporaryDirectory(prefix="harmonica-generate-") as tmp:
        write_product_tree(manifest, files, Path(tmp))
    return generate_payload(manifest, files)
