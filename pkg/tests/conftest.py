from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parent.parent
if str(REPO) not in sys.path:
    sys.path.insert(0, str(REPO))

FIXTURES = REPO / "fixtures"
GOLDEN = FIXTURES / "golden"
KB_DIR = FIXTURES / "kb"
MODEL_FILE = FIXTURES / "feature_model.json"
PROFILE_FILE = FIXTURES / "profiles" / "example.json"

E2E_VARIABLES = {"project": "demo", "node-count": "3"}
E2E_CHOICES = ["event-indexer", "contract-upgradeable"]


@pytest.fixture(scope="session")
def kb():
    from harmonica.kb import load_knowledge_base

    return load_knowledge_base(KB_DIR)


@pytest.fixture(scope="session")
def model():
    from harmonica.banco import load_feature_model

    return load_feature_model(MODEL_FILE)


@pytest.fixture(scope="session")
def example_profile():
    from harmonica.blade import load_profile

    return load_profile(PROFILE_FILE)


@pytest.fixture(scope="session")
def golden_report() -> dict:
    return json.loads((GOLDEN / "report.json").read_text())


@pytest.fixture(scope="session")
def golden_manifest() -> dict:
    return json.loads((GOLDEN / "manifest.json").read_text())


@pytest.fixture(scope="session")
def golden_config() -> dict:
    return json.loads((GOLDEN / "config.json").read_text())


@pytest.fixture(scope="session")
def golden_enumeration_count() -> int:
    return json.loads((GOLDEN / "enumeration.json").read_text())["count"]


@pytest.fixture()
def kb_docs() -> dict[str, dict]:
    """Freshly parsed fixture documents, safe to mutate per test."""
    return {
        name: json.loads((KB_DIR / f"{name}.json").read_text())
        for name in ("attributes", "blockchains", "patterns", "conflict_rules", "assets")
    }


def profile_from(levels: dict[str, str] | None = None, required: dict[str, int] | None = None):
    """Build a profile quickly: levels by label, required with min levels."""
    from harmonica.blade import parse_profile

    requirements: dict[str, dict] = {}
    for attribute_id, label in (levels or {}).items():
        requirements[attribute_id] = {"level": label}
    for attribute_id, min_level in (required or {}).items():
        entry = requirements.setdefault(attribute_id, {})
        entry["required"] = True
        entry["min_level"] = min_level
    return parse_profile({"requirements": requirements})
