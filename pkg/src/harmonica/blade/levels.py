"""Preference levels: the five-step scale users rate attributes on."""

from __future__ import annotations

from enum import IntEnum


class PreferenceLevel(IntEnum):
    """Ordinal preference scale, Indifferent up to Extremely Desirable."""

    INDIFFERENT = 0
    SLIGHTLY_DESIRABLE = 1
    DESIRABLE = 2
    HIGHLY_DESIRABLE = 3
    EXTREMELY_DESIRABLE = 4


LEVEL_LABELS: dict[int, str] = {
    PreferenceLevel.INDIFFERENT: "indifferent",
    PreferenceLevel.SLIGHTLY_DESIRABLE: "slightly-desirable",
    PreferenceLevel.DESIRABLE: "desirable",
    PreferenceLevel.HIGHLY_DESIRABLE: "highly-desirable",
    PreferenceLevel.EXTREMELY_DESIRABLE: "extremely-desirable",
}

LEVELS_BY_LABEL: dict[str, PreferenceLevel] = {
    label: PreferenceLevel(value) for value, label in LEVEL_LABELS.items()
}

HUMAN_LABELS: dict[int, str] = {
    PreferenceLevel.INDIFFERENT: "Indifferent",
    PreferenceLevel.SLIGHTLY_DESIRABLE: "Slightly Desirable",
    PreferenceLevel.DESIRABLE: "Desirable",
    PreferenceLevel.HIGHLY_DESIRABLE: "Highly Desirable",
    PreferenceLevel.EXTREMELY_DESIRABLE: "Extremely Desirable",
}


def parse_level_label(label: str) -> PreferenceLevel:
    try:
        return LEVELS_BY_LABEL[label]
    except KeyError:
        expected = ", ".join(LEVEL_LABELS.values())
        raise ValueError(f"unknown preference level {label!r} (expected one of: {expected})")


def level_label(level: int) -> str:
    return LEVEL_LABELS[PreferenceLevel(level)]
