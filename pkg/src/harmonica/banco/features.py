"""Variability model: a single-root feature tree with cross-tree constraints.

Dialect: features are mandatory or optional under their parent; a feature's
``group`` says how its children are chosen (none = independently, xor =
exactly one when the parent is selected, or = at least one). Cross-tree
constraints are requires/excludes pairs. Two maps tie knowledge base
entities to features so recommendations can preselect them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..errors import (
    CyclicTreeError,
    DocumentParseError,
    ModelStructureError,
    MultipleRootsError,
    UnknownFeatureError,
)
from ..jsonio import read_json_document

VARIABILITY_KINDS = ("mandatory", "optional")
GROUP_KINDS = ("none", "xor", "or")
CONSTRAINT_KINDS = ("requires", "excludes")


@dataclass(frozen=True)
class Feature:
    id: str
    name: str
    parent: str | None
    variability: str = "optional"
    group: str = "none"

    @property
    def mandatory(self) -> bool:
        return self.variability == "mandatory"


@dataclass(frozen=True)
class CrossTreeConstraint:
    kind: str  # "requires" or "excludes"
    from_feature: str
    to_feature: str

    def to_payload(self) -> dict:
        return {"kind": self.kind, "from": self.from_feature, "to": self.to_feature}


@dataclass(frozen=True)
class FeatureModel:
    features: tuple[Feature, ...]
    constraints: tuple[CrossTreeConstraint, ...]
    blockchain_feature_map: dict[str, str]
    pattern_feature_map: dict[str, str]
    version: str = "0"
    _children: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        children: dict[str, list[str]] = {f.id: [] for f in self.features}
        for feature in self.features:
            if feature.parent is not None and feature.parent in children:
                children[feature.parent].append(feature.id)
        self._children.update(children)

    @property
    def by_id(self) -> dict[str, Feature]:
        return {f.id: f for f in self.features}

    @property
    def root(self) -> Feature:
        return next(f for f in self.features if f.parent is None)

    def feature(self, feature_id: str) -> Feature:
        try:
            return self.by_id[feature_id]
        except KeyError:
            raise UnknownFeatureError(feature_id)

    def children_of(self, feature_id: str) -> tuple[str, ...]:
        return tuple(self._children.get(feature_id, ()))

    def feature_ids(self) -> tuple[str, ...]:
        return tuple(f.id for f in self.features)

    def to_payload(self) -> dict:
        return {
            "version": self.version,
            "features": [
                {
                    "id": f.id,
                    "name": f.name,
                    "parent": f.parent,
                    "variability": f.variability,
                    "group": f.group,
                }
                for f in self.features
            ],
            "constraints": [c.to_payload() for c in self.constraints],
            "blockchain_feature_map": dict(self.blockchain_feature_map),
            "pattern_feature_map": dict(self.pattern_feature_map),
        }


def load_feature_model(path: str | Path) -> FeatureModel:
    doc = read_json_document(path)
    return parse_feature_model(doc, file=str(path))


def parse_feature_model(doc: dict, file: str = "feature_model.json") -> FeatureModel:
    """Strict-parse and structurally validate a feature model document."""
    unknown = sorted(set(doc) - {"version", "features", "constraints", "blockchain_feature_map", "pattern_feature_map"})
    if unknown:
        raise DocumentParseError(file, f"unknown field(s): {', '.join(unknown)}")
    if not isinstance(doc.get("features"), list):
        raise DocumentParseError(file, "'features' must be a list")

    features = []
    for item in doc["features"]:
        if not isinstance(item, dict):
            raise DocumentParseError(file, "feature entries must be objects")
        where = f"feature {item.get('id', '?')!r}"
        bad = sorted(set(item) - {"id", "name", "parent", "variability", "group"})
        if bad:
            raise DocumentParseError(file, f"{where}: unknown field(s): {', '.join(bad)}")
        feature_id = item.get("id")
        if not isinstance(feature_id, str) or not feature_id:
            raise DocumentParseError(file, f"{where}: 'id' must be a non-empty string")
        parent = item.get("parent")
        if parent is not None and not isinstance(parent, str):
            raise DocumentParseError(file, f"{where}: 'parent' must be a string or null")
        variability = item.get("variability", "optional")
        if variability not in VARIABILITY_KINDS:
            raise DocumentParseError(file, f"{where}: unknown variability {variability!r}")
        group = item.get("group", "none")
        if group not in GROUP_KINDS:
            raise DocumentParseError(file, f"{where}: unknown group {group!r}")
        name = item.get("name", feature_id)
        if not isinstance(name, str):
            raise DocumentParseError(file, f"{where}: 'name' must be a string")
        features.append(Feature(id=feature_id, name=name, parent=parent, variability=variability, group=group))

    constraints = []
    for item in doc.get("constraints", []):
        if not isinstance(item, dict):
            raise DocumentParseError(file, "constraint entries must be objects")
        bad = sorted(set(item) - {"kind", "from", "to"})
        if bad:
            raise DocumentParseError(file, f"constraint: unknown field(s): {', '.join(bad)}")
        kind = item.get("kind")
        if kind not in CONSTRAINT_KINDS:
            raise DocumentParseError(file, f"constraint: unknown kind {kind!r}")
        source, target = item.get("from"), item.get("to")
        if not isinstance(source, str) or not isinstance(target, str):
            raise DocumentParseError(file, "constraint: 'from' and 'to' must be feature ids")
        constraints.append(CrossTreeConstraint(kind=kind, from_feature=source, to_feature=target))

    def _string_map(key: str) -> dict[str, str]:
        raw = doc.get(key, {})
        if not isinstance(raw, dict) or not all(isinstance(v, str) for v in raw.values()):
            raise DocumentParseError(file, f"'{key}' must map ids to feature ids")
        return dict(raw)

    version = doc.get("version", "0")
    if not isinstance(version, str):
        raise DocumentParseError(file, "'version' must be a string")

    model = FeatureModel(
        features=tuple(features),
        constraints=tuple(constraints),
        blockchain_feature_map=_string_map("blockchain_feature_map"),
        pattern_feature_map=_string_map("pattern_feature_map"),
        version=version,
    )
    _validate_structure(model)
    return model


def _validate_structure(model: FeatureModel) -> None:
    ids = [f.id for f in model.features]
    id_set = set(ids)
    if len(ids) != len(id_set):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise ModelStructureError(f"duplicate feature id(s): {', '.join(dupes)}")

    roots = [f for f in model.features if f.parent is None]
    if not roots:
        raise ModelStructureError("feature model has no root feature")
    if len(roots) > 1:
        raise MultipleRootsError([f.id for f in roots])
    root = roots[0]
    if not root.mandatory:
        raise ModelStructureError(f"root feature {root.id!r} must be mandatory")

    for feature in model.features:
        if feature.parent is not None and feature.parent not in id_set:
            raise ModelStructureError(f"feature {feature.id!r} references unknown parent {feature.parent!r}")

    # reachability from the root doubles as the cycle check: a parent cycle
    # is unreachable from the root in a forest with unique parents
    reachable = set()
    stack = [root.id]
    while stack:
        current = stack.pop()
        if current in reachable:
            continue
        reachable.add(current)
        stack.extend(model.children_of(current))
    unreachable = sorted(id_set - reachable)
    if unreachable:
        raise CyclicTreeError(unreachable)

    by_id = model.by_id
    for feature in model.features:
        if feature.group in ("xor", "or"):
            children = model.children_of(feature.id)
            if not children:
                raise ModelStructureError(f"{feature.group} group {feature.id!r} has no children")
            for child_id in children:
                if by_id[child_id].mandatory:
                    raise ModelStructureError(
                        f"{feature.group} group {feature.id!r} has a mandatory child {child_id!r}"
                    )

    for constraint in model.constraints:
        for feature_id in (constraint.from_feature, constraint.to_feature):
            if feature_id not in id_set:
                raise ModelStructureError(f"constraint references unknown feature {feature_id!r}")
        if constraint.from_feature == constraint.to_feature:
            raise ModelStructureError(f"constraint pairs feature {constraint.from_feature!r} with itself")

    for name, mapping in (
        ("blockchain_feature_map", model.blockchain_feature_map),
        ("pattern_feature_map", model.pattern_feature_map),
    ):
        for key, feature_id in mapping.items():
            if feature_id not in id_set:
                raise ModelStructureError(f"{name}[{key!r}] references unknown feature {feature_id!r}")

    # the mapped blockchain alternatives must form one xor group
    blockchain_features = list(model.blockchain_feature_map.values())
    if blockchain_features:
        parents = {by_id[f].parent for f in blockchain_features}
        if len(parents) != 1:
            raise ModelStructureError("blockchain features must share a single parent group")
        parent = parents.pop()
        if parent is None or by_id[parent].group != "xor":
            raise ModelStructureError("blockchain features must sit in an xor group")
