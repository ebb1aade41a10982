#!/usr/bin/env python3
"""Freeze the golden files under fixtures/golden/.

Each golden is verified before freezing:
  report.json       engine output, cross-checked number-by-number against the
                    independent brute-force ranking oracle
  config.json       the end-to-end configuration (preselect + propagation +
                    the two scripted choices), checked complete and valid
  manifest.json     product manifest, generated twice and compared
  enumeration.json  configuration count, cross-checked against the
                    independent bitmask enumerator

Run from the repo root after any intentional fixture or engine change.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))
sys.path.insert(0, str(REPO))

from harmonica import service  # noqa: E402
from harmonica.banco import (  # noqa: E402
    complete_configuration,
    enumerate_configurations,
    load_feature_model,
    parse_configuration,
    preselect_from_recommendation,
    render_product,
    validate_configuration,
)
from harmonica.blade import load_profile, recommend  # noqa: E402
from harmonica.jsonio import canonical_json  # noqa: E402
from harmonica.kb import load_knowledge_base  # noqa: E402
from tests.oracle_enum import oracle_enumerate  # noqa: E402
from tests.oracle_topsis import oracle_order, oracle_topsis  # noqa: E402

FIXTURES = REPO / "fixtures"
GOLDEN = FIXTURES / "golden"

E2E_CHOICES = ["event-indexer", "contract-upgradeable"]
E2E_VARIABLES = {"project": "demo", "node-count": "3"}


def write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    print(f"froze {path.relative_to(REPO)}")


def verify_report_against_oracle(kb, profile, payload: dict) -> None:
    """Recompute weights, screening, and ranking from first principles."""
    profile_doc = json.loads((FIXTURES / "profiles" / "example.json").read_text())
    requirements = profile_doc["requirements"]
    level_ord = {
        "indifferent": 0,
        "slightly-desirable": 1,
        "desirable": 2,
        "highly-desirable": 3,
        "extremely-desirable": 4,
    }

    raw = {}
    for attr in kb.attributes:
        entry = requirements.get(attr.id, {})
        value = 4 if entry.get("required") else level_ord[entry.get("level", "indifferent")]
        if value > 0:
            raw[attr.id] = value
    total = sum(raw.values())
    weights = {a: v / total for a, v in raw.items()}

    qualified = []
    for chain in kb.blockchains:
        failed = any(
            entry.get("required") and chain.scores[attr_id] < entry.get("min_level", 3)
            for attr_id, entry in requirements.items()
        )
        if not failed:
            qualified.append(chain)

    active = [a for a in kb.attribute_ids if a in weights]
    rows = [[chain.scores[a] for a in active] for chain in qualified]
    directions = [kb.attribute(a).direction for a in active]
    closeness, d_plus, d_minus = oracle_topsis(rows, directions, [weights[a] for a in active])

    expected_order = oracle_order([c.id for c in qualified], closeness)
    got_order = [e["blockchain_id"] for e in payload["ranking"]["entries"]]
    assert got_order == expected_order, (got_order, expected_order)

    by_id = {c.id: i for i, c in enumerate(qualified)}
    for entry in payload["ranking"]["entries"]:
        i = by_id[entry["blockchain_id"]]
        assert abs(entry["closeness"] - closeness[i]) < 1e-9
        assert abs(entry["d_plus"] - d_plus[i]) < 1e-9
        assert abs(entry["d_minus"] - d_minus[i]) < 1e-9
    print(f"report verified against oracle: order {got_order}")


def main() -> None:
    kb = load_knowledge_base(FIXTURES / "kb")
    model = load_feature_model(FIXTURES / "feature_model.json")
    profile = load_profile(FIXTURES / "profiles" / "example.json")

    # golden report
    report = recommend(profile, kb)
    payload = report.to_payload()
    verify_report_against_oracle(kb, profile, payload)
    write(GOLDEN / "report.json", canonical_json(payload))

    # golden configuration: preselect, propagate, two scripted choices
    config = complete_configuration(preselect_from_recommendation(report, model), model)
    for choice in E2E_CHOICES:
        config = complete_configuration(
            parse_configuration(
                {"selected": sorted(config.selected | {choice}), "deselected": sorted(config.deselected)}
            ),
            model,
        )
    validity = validate_configuration(config, model)
    assert validity.status == "valid", validity
    write(GOLDEN / "config.json", canonical_json(config.to_payload(model)))

    # golden manifest, generated twice
    manifest_a, files_a = render_product(config, model, kb, E2E_VARIABLES)
    manifest_b, files_b = render_product(config, model, kb, E2E_VARIABLES)
    assert manifest_a == manifest_b and files_a == files_b
    write(GOLDEN / "manifest.json", canonical_json(manifest_a.to_payload()))

    # golden enumeration count, dual enumerators
    ours = {frozenset(c.selected) for c in enumerate_configurations(model)}
    model_doc = json.loads((FIXTURES / "feature_model.json").read_text())
    independent = oracle_enumerate(model_doc)
    assert ours == independent, (len(ours), len(independent))
    write(GOLDEN / "enumeration.json", canonical_json({"count": len(ours)}))
    print(f"enumeration agreed at {len(ours)} configurations")


if __name__ == "__main__":
    main()
