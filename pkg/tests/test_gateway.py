import base64
import concurrent.futures
import hashlib
import io
import json
import zipfile

import pytest
from fastapi.testclient import TestClient

from harmonica.gateway.app import create_app

from tests.conftest import GOLDEN, PROFILE_FILE


@pytest.fixture(scope="module")
def client(kb, model):
    with TestClient(create_app(kb, model)) as test_client:
        yield test_client


@pytest.fixture(scope="module")
def profile_doc():
    return json.loads(PROFILE_FILE.read_text())


def test_attributes_lists_catalog(client):
    response = client.get("/api/attributes")
    assert response.status_code == 200
    assert len(response.json()["attributes"]) == 14


def test_blockchains_and_patterns(client):
    assert len(client.get("/api/blockchains").json()["blockchains"]) == 5
    assert len(client.get("/api/patterns").json()["patterns"]) == 8


def test_feature_model_payload(client, model):
    assert client.get("/api/feature-model").json() == model.to_payload()


def test_recommend_matches_golden_bytes(client, profile_doc):
    response = client.post("/api/recommend", json=profile_doc)
    assert response.status_code == 200
    assert response.content == (GOLDEN / "report.json").read_bytes()


def test_empty_profile_is_422_no_active_criteria(client):
    response = client.post("/api/recommend", json={"requirements": {}})
    assert response.status_code == 422
    assert response.json()["error"]["code"] == "no-active-criteria"


def test_conflict_profile_reports_one_violation(client):
    profile = {
        "requirements": {
            "immutability": {"required": True, "min_level": 4},
            "modifiability": {"level": "extremely-desirable"},
        }
    }
    response = client.post("/api/conflicts", json=profile)
    assert response.status_code == 200
    violations = response.json()["violations"]
    assert len(violations) == 1
    assert violations[0]["severity"] == "error"
    assert {violations[0]["rule"]["left"], violations[0]["rule"]["right"]} == {"immutability", "modifiability"}


def test_blocked_map_for_required_immutability(client):
    profile = {"requirements": {"immutability": {"required": True}}}
    response = client.post("/api/blocked", json=profile)
    assert response.status_code == 200
    blocked = response.json()["blocked"]
    assert set(blocked) == {"modifiability"}


def test_unknown_attribute_code(client):
    response = client.post("/api/conflicts", json={"requirements": {"latencyy": {"level": "desirable"}}})
    assert response.status_code == 422
    assert response.json()["error"]["code"] == "unknown-attribute"


def test_malformed_body_is_400(client):
    response = client.post(
        "/api/recommend", content=b"not json", headers={"content-type": "application/json"}
    )
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "invalid-request"


def test_preselect_validate_complete_flow(client, profile_doc, golden_config):
    report = client.post("/api/recommend", json=profile_doc).json()
    preselected = client.post("/api/preselect", json=report)
    assert preselected.status_code == 200
    config = preselected.json()
    assert set(config["selected"]) == {"platform-chain-c", "storage-offchain"}

    completed = client.post("/api/configure/complete", json=config).json()
    for choice in ("event-indexer", "contract-upgradeable"):
        completed["selected"] = sorted(set(completed["selected"]) | {choice})
        completed = client.post("/api/configure/complete", json=completed).json()
    assert completed["open"] == []
    assert set(completed["selected"]) == set(golden_config["selected"])

    validity = client.post("/api/configure/validate", json=completed).json()
    assert validity["status"] == "valid"


def test_generate_returns_manifest_and_archive(client, golden_config, golden_manifest):
    response = client.post(
        "/api/generate",
        json={"configuration": golden_config, "variables": {"project": "demo", "node-count": "3"}},
    )
    assert response.status_code == 200
    payload = response.json()
    assert payload["manifest"] == golden_manifest

    archive = zipfile.ZipFile(io.BytesIO(base64.b64decode(payload["archive_base64"])))
    names = set(archive.namelist())
    assert "manifest.json" in names
    for entry in golden_manifest["entries"]:
        data = archive.read(entry["path"])
        assert hashlib.sha256(data).hexdigest() == entry["sha256"]
        assert len(data) == entry["bytes"]


def test_generate_rejects_incomplete_configuration(client):
    response = client.post(
        "/api/generate",
        json={"configuration": {"selected": ["platform-chain-a"], "deselected": []}, "variables": {}},
    )
    assert response.status_code == 422
    assert response.json()["error"]["code"] == "invalid-configuration"


def test_cli_json_byte_equal_to_api_bodies(client, profile_doc, golden_config, tmp_path):
    """CLI --json output and HTTP bodies are the same bytes for every shared op."""
    from click.testing import CliRunner

    from harmonica.cli import main

    from tests.conftest import KB_DIR, MODEL_FILE

    runner = CliRunner()

    cases = [
        (["recommend", "--kb", str(KB_DIR), "--profile", str(PROFILE_FILE), "--json"],
         client.post("/api/recommend", json=profile_doc)),
        (["conflicts", "--kb", str(KB_DIR), "--profile", str(PROFILE_FILE), "--json"],
         client.post("/api/conflicts", json=profile_doc)),
    ]
    config_file = tmp_path / "config.json"
    config_file.write_text(json.dumps(golden_config))
    cases.append(
        (["configure", "validate", "--model", str(MODEL_FILE), "--config", str(config_file), "--json"],
         client.post("/api/configure/validate", json=golden_config))
    )
    cases.append(
        (["configure", "complete", "--model", str(MODEL_FILE), "--config", str(config_file), "--json"],
         client.post("/api/configure/complete", json=golden_config))
    )
    out_dir = tmp_path / "out"
    cases.append(
        (["generate", "--kb", str(KB_DIR), "--model", str(MODEL_FILE), "--config", str(config_file),
          "--out", str(out_dir), "--var", "project=demo", "--var", "node-count=3", "--json"],
         client.post("/api/generate",
                     json={"configuration": golden_config, "variables": {"project": "demo", "node-count": "3"}}))
    )

    for args, response in cases:
        result = runner.invoke(main, args)
        assert result.exit_code == 0, (args, result.output)
        assert result.stdout_bytes == response.content, args


def test_concurrent_requests_match_serial_responses(client, profile_doc, golden_config):
    """Statelessness: interleaved requests return the serial bodies."""
    requests = [
        ("/api/recommend", profile_doc),
        ("/api/conflicts", profile_doc),
        ("/api/configure/complete", golden_config),
        ("/api/generate", {"configuration": golden_config, "variables": {"project": "demo", "node-count": "3"}}),
    ] * 6
    serial = [client.post(path, json=body).content for path, body in requests]

    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        futures = [pool.submit(client.post, path, json=body) for path, body in requests]
        concurrent_bodies = [f.result().content for f in futures]
    assert concurrent_bodies == serial
