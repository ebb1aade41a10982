"""Render a recommendation report to files: CSV tables plus figures.

Writes into the output directory:
    report.json        full canonical report payload
    ranking.csv        one row per blockchain (ranked and disqualified)
    closeness.png      closeness coefficients as a bar chart
    contributions.png  weighted per-criterion values behind each score

When the ranking is gated by error conflicts only report.json and a
conflicts.csv are produced.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .jsonio import canonical_json  # noqa: E402

_BAR_COLOR = "#4878a8"
_DISQUALIFIED_COLOR = "#b34a4a"


def write_report_files(payload: dict, kb, out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    report_path = out / "report.json"
    report_path.write_text(canonical_json(payload), encoding="utf-8")
    written.append(report_path)

    if payload["conflicts"]["violations"]:
        written.append(_write_conflicts_csv(payload, out))
    if payload["ranking"] is None:
        return written

    written.append(_write_ranking_csv(payload, out))
    written.append(_plot_closeness(payload, out))
    written.append(_plot_contributions(payload, kb, out))
    return written


def _write_conflicts_csv(payload: dict, out: Path) -> Path:
    path = out / "conflicts.csv"
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["severity", "left", "right", "threshold", "explanation"])
        for violation in payload["conflicts"]["violations"]:
            rule = violation["rule"]
            writer.writerow(
                [violation["severity"], rule["left"], rule["right"], rule["threshold"], rule["explanation"]]
            )
    return path


def _write_ranking_csv(payload: dict, out: Path) -> Path:
    path = out / "ranking.csv"
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["rank", "blockchain_id", "status", "closeness", "d_plus", "d_minus", "reason"])
        for position, entry in enumerate(payload["ranking"]["entries"], start=1):
            writer.writerow(
                [
                    position,
                    entry["blockchain_id"],
                    "ranked",
                    f"{entry['closeness']:.9f}",
                    f"{entry['d_plus']:.9f}",
                    f"{entry['d_minus']:.9f}",
                    "",
                ]
            )
        for record in payload["ranking"]["disqualified"]:
            writer.writerow(
                [
                    "",
                    record["blockchain_id"],
                    "disqualified",
                    "",
                    "",
                    "",
                    f"{record['attribute_id']}={record['actual_score']} below required {record['min_level']}",
                ]
            )
    return path


def _plot_closeness(payload: dict, out: Path) -> Path:
    entries = payload["ranking"]["entries"]
    names = [e["blockchain_id"] for e in entries]
    values = [e["closeness"] for e in entries]

    fig, ax = plt.subplots(figsize=(6.4, 0.6 * max(len(names), 3) + 1.2))
    positions = range(len(names))
    ax.barh(positions, values, color=_BAR_COLOR)
    ax.set_yticks(list(positions))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlim(0.0, 1.0)
    ax.set_xlabel("closeness coefficient")
    ax.set_title("Blockchain ranking")
    for disqualified in {d["blockchain_id"] for d in payload["ranking"]["disqualified"]}:
        ax.plot([], [], color=_DISQUALIFIED_COLOR, label=f"{disqualified} disqualified")
    if payload["ranking"]["disqualified"]:
        ax.legend(loc="lower right", fontsize=8)
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)

    path = out / "closeness.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def _plot_contributions(payload: dict, kb, out: Path) -> Path:
    entries = payload["ranking"]["entries"]
    names = [e["blockchain_id"] for e in entries]
    criteria = [a for a in kb.attribute_ids if a in entries[0]["per_criterion_contribution"]]

    fig, ax = plt.subplots(figsize=(7.2, 4.2))
    bottoms = [0.0] * len(names)
    cmap = plt.get_cmap("tab20")
    for index, attribute_id in enumerate(criteria):
        heights = [e["per_criterion_contribution"][attribute_id]["weighted_value"] for e in entries]
        ax.bar(names, heights, bottom=bottoms, label=attribute_id, color=cmap(index % 20))
        bottoms = [b + h for b, h in zip(bottoms, heights)]
    ax.set_ylabel("weighted normalized value")
    ax.set_title("Per-criterion contributions")
    ax.legend(fontsize=7, ncol=2, loc="upper right")
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)

    path = out / "contributions.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
