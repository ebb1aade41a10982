import csv
import json

from harmonica import service
from harmonica.reporting import write_report_files

from tests.conftest import PROFILE_FILE


def test_report_files_for_ranked_profile(kb, tmp_path):
    payload = service.recommend_op(json.loads(PROFILE_FILE.read_text()), kb)
    written = write_report_files(payload, kb, tmp_path)
    names = {path.name for path in written}
    assert names == {"report.json", "ranking.csv", "closeness.png", "contributions.png"}

    with (tmp_path / "ranking.csv").open() as handle:
        rows = list(csv.DictReader(handle))
    ranked = [r for r in rows if r["status"] == "ranked"]
    disqualified = [r for r in rows if r["status"] == "disqualified"]
    assert [r["blockchain_id"] for r in ranked] == ["chain-c", "chain-b", "chain-d", "chain-a"]
    assert [r["blockchain_id"] for r in disqualified] == ["chain-e"]
    assert "immutability=2 below required 3" in disqualified[0]["reason"]

    # figures are real PNGs
    for name in ("closeness.png", "contributions.png"):
        assert (tmp_path / name).read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_report_files_for_gated_profile(kb, tmp_path):
    profile = {
        "requirements": {
            "immutability": {"required": True, "min_level": 4},
            "modifiability": {"level": "extremely-desirable"},
        }
    }
    payload = service.recommend_op(profile, kb)
    written = write_report_files(payload, kb, tmp_path)
    names = {path.name for path in written}
    assert names == {"report.json", "conflicts.csv"}
    with (tmp_path / "conflicts.csv").open() as handle:
        rows = list(csv.DictReader(handle))
    assert rows[0]["severity"] == "error"
