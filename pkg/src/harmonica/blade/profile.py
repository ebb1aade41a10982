"""Preference profiles: the sole user input to the recommendation engine.

Document format (strict):

    {"requirements": {"<attribute-id>": {"level": "<label>",
                                         "required": bool,
                                         "min_level": int}}}

``level`` defaults to indifferent, ``required`` to false. ``min_level`` is
only allowed together with ``required`` and defaults to 3 when omitted on a
required attribute. An attribute absent from the map is equivalent to
indifferent and not required.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ..errors import InvalidRequestError, UnknownAttributeError
from ..jsonio import read_json_document
from .levels import LEVEL_LABELS, PreferenceLevel, parse_level_label

DEFAULT_MIN_LEVEL = 3


@dataclass(frozen=True)
class Requirement:
    attribute_id: str
    level: PreferenceLevel = PreferenceLevel.INDIFFERENT
    required: bool = False
    min_level: int | None = None  # present iff required

    def __post_init__(self):
        if self.required and self.min_level is None:
            object.__setattr__(self, "min_level", DEFAULT_MIN_LEVEL)
        if not self.required and self.min_level is not None:
            raise InvalidRequestError(
                f"attribute {self.attribute_id!r}: min_level is only allowed on required attributes"
            )

    @property
    def active(self) -> bool:
        """Whether this requirement influences ranking at all."""
        return self.required or self.level > PreferenceLevel.INDIFFERENT

    @property
    def effective_level(self) -> PreferenceLevel:
        """Level used for weighting and conflict checks.

        A hard requirement counts as extremely desirable regardless of the
        stated level: it is at least as important as the strongest label.
        """
        if self.required:
            return PreferenceLevel.EXTREMELY_DESIRABLE
        return self.level

    def to_payload(self) -> dict:
        payload: dict = {"level": LEVEL_LABELS[self.level], "required": self.required}
        if self.required:
            payload["min_level"] = self.min_level
        return payload


@dataclass(frozen=True)
class PreferenceProfile:
    requirements: dict[str, Requirement]

    def get(self, attribute_id: str) -> Requirement:
        return self.requirements.get(attribute_id, Requirement(attribute_id))

    def is_active(self, attribute_id: str) -> bool:
        return self.get(attribute_id).active

    def active_requirements(self, kb) -> list[Requirement]:
        """Active requirements in attribute catalog order."""
        return [self.get(a) for a in kb.attribute_ids if self.is_active(a)]

    def required_attributes(self, kb) -> list[Requirement]:
        return [req for req in self.active_requirements(kb) if req.required]

    def validate_against(self, kb) -> None:
        """Check attribute ids resolve and min levels sit inside the scale."""
        for attribute_id, req in self.requirements.items():
            if not kb.has("attribute", attribute_id):
                raise UnknownAttributeError(attribute_id)
            if req.required:
                attr = kb.attribute(attribute_id)
                if not attr.in_scale(req.min_level):
                    raise InvalidRequestError(
                        f"attribute {attribute_id!r}: min_level {req.min_level} outside "
                        f"scale [{attr.scale_min}, {attr.scale_max}]"
                    )

    def with_requirement(self, req: Requirement) -> "PreferenceProfile":
        updated = dict(self.requirements)
        updated[req.attribute_id] = req
        return PreferenceProfile(updated)

    def to_payload(self) -> dict:
        return {
            "requirements": {
                attribute_id: self.requirements[attribute_id].to_payload()
                for attribute_id in sorted(self.requirements)
            }
        }


def parse_profile(doc: dict) -> PreferenceProfile:
    """Strict-parse a profile document."""
    if not isinstance(doc, dict):
        raise InvalidRequestError("profile must be a JSON object")
    unknown = sorted(set(doc) - {"requirements"})
    if unknown:
        raise InvalidRequestError(f"profile: unknown field(s): {', '.join(unknown)}")
    raw = doc.get("requirements", {})
    if not isinstance(raw, dict):
        raise InvalidRequestError("profile: 'requirements' must be an object")

    requirements = {}
    for attribute_id, entry in raw.items():
        if not isinstance(entry, dict):
            raise InvalidRequestError(f"attribute {attribute_id!r}: requirement must be an object")
        unknown = sorted(set(entry) - {"level", "required", "min_level"})
        if unknown:
            raise InvalidRequestError(f"attribute {attribute_id!r}: unknown field(s): {', '.join(unknown)}")
        label = entry.get("level", LEVEL_LABELS[PreferenceLevel.INDIFFERENT])
        if not isinstance(label, str):
            raise InvalidRequestError(f"attribute {attribute_id!r}: 'level' must be a string label")
        try:
            level = parse_level_label(label)
        except ValueError as exc:
            raise InvalidRequestError(f"attribute {attribute_id!r}: {exc}")
        required = entry.get("required", False)
        if not isinstance(required, bool):
            raise InvalidRequestError(f"attribute {attribute_id!r}: 'required' must be a boolean")
        min_level = entry.get("min_level")
        if min_level is not None and (isinstance(min_level, bool) or not isinstance(min_level, int)):
            raise InvalidRequestError(f"attribute {attribute_id!r}: 'min_level' must be an integer")
        requirements[attribute_id] = Requirement(
            attribute_id=attribute_id, level=level, required=required, min_level=min_level
        )
    return PreferenceProfile(requirements)


def load_profile(path: str | Path) -> PreferenceProfile:
    return parse_profile(read_json_document(path))
