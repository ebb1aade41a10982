"""Exception hierarchy shared by the engines, the CLI, and the HTTP gateway.

Every error carries a stable machine-readable ``code`` plus a structured
``details`` payload; the gateway serializes these 1:1 into API error bodies,
so the codes here are frozen (see docs/api.md).
"""

from __future__ import annotations


class HarmonicaError(Exception):
    """Base class for all domain errors."""

    code = "internal-error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_payload(self) -> dict:
        return {
            "error": {
                "code": self.code,
                "message": self.message,
                "details": _jsonable(self.details),
            }
        }


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    return value


# --- knowledge base ---------------------------------------------------------

class MissingFileError(HarmonicaError):
    code = "missing-file"

    def __init__(self, name: str):
        super().__init__(f"missing knowledge base document: {name}", name=name)
        self.name = name


class DocumentParseError(HarmonicaError):
    """Strict-parse failure in a JSON document (syntax or schema)."""

    code = "parse-error"

    def __init__(self, file: str, message: str, line: int | None = None):
        where = f"{file}:{line}" if line is not None else file
        super().__init__(f"{where}: {message}", file=file, line=line)
        self.file = file
        self.line = line


class ValidationFailedError(HarmonicaError):
    code = "kb-validation-failed"

    def __init__(self, report):
        errors = [issue.message for issue in report.errors]
        super().__init__(
            f"knowledge base failed validation with {len(errors)} error(s)",
            errors=errors,
        )
        self.report = report


class NotFoundError(HarmonicaError):
    code = "not-found"

    def __init__(self, kind: str, entity_id: str):
        super().__init__(f"no {kind} with id {entity_id!r}", kind=kind, id=entity_id)
        self.kind = kind
        self.entity_id = entity_id


# --- recommendation engine --------------------------------------------------

class UnknownAttributeError(HarmonicaError):
    code = "unknown-attribute"

    def __init__(self, attribute_id: str):
        super().__init__(f"unknown attribute: {attribute_id!r}", attribute_id=attribute_id)
        self.attribute_id = attribute_id


class NoActiveCriteriaError(HarmonicaError):
    code = "no-active-criteria"

    def __init__(self):
        super().__init__("profile has no active criteria: every attribute is indifferent and none is required")


class AllDisqualifiedError(HarmonicaError):
    code = "all-disqualified"

    def __init__(self, disqualified):
        super().__init__(
            "every blockchain fails at least one required attribute",
            disqualified=[r.to_payload() for r in disqualified],
        )
        self.disqualified = disqualified


class EmptyMatrixError(HarmonicaError):
    code = "empty-matrix"


class WeightMismatchError(HarmonicaError):
    code = "weight-mismatch"


class NotRankedError(HarmonicaError):
    code = "not-ranked"

    def __init__(self, blockchain_id: str):
        super().__init__(f"blockchain {blockchain_id!r} is not in the ranking", blockchain_id=blockchain_id)
        self.blockchain_id = blockchain_id


# --- configurator -----------------------------------------------------------

class ModelStructureError(HarmonicaError):
    """Feature model violates a tree invariant."""

    code = "invalid-model"


class MultipleRootsError(ModelStructureError):
    def __init__(self, roots):
        super().__init__(f"feature model has multiple roots: {', '.join(sorted(roots))}", roots=sorted(roots))


class CyclicTreeError(ModelStructureError):
    def __init__(self, feature_ids):
        super().__init__(
            f"feature parent links contain a cycle through: {', '.join(sorted(feature_ids))}",
            features=sorted(feature_ids),
        )


class UnknownFeatureError(HarmonicaError):
    code = "unknown-feature"

    def __init__(self, feature_id: str):
        super().__init__(f"unknown feature: {feature_id!r}", feature_id=feature_id)
        self.feature_id = feature_id


class ContradictionError(HarmonicaError):
    code = "contradiction"

    def __init__(self, features, message: str | None = None):
        features = sorted(features)
        super().__init__(
            message or f"propagation forces conflicting decisions on: {', '.join(features)}",
            features=features,
        )
        self.features = features


class ExceededLimitError(HarmonicaError):
    code = "exceeded-limit"


class InvalidConfigurationError(HarmonicaError):
    code = "invalid-configuration"

    def __init__(self, message: str, **details):
        super().__init__(message, **details)


class UnmappedBlockchainError(HarmonicaError):
    code = "unmapped-blockchain"

    def __init__(self, blockchain_id: str):
        super().__init__(
            f"top-ranked blockchain {blockchain_id!r} has no feature mapping",
            blockchain_id=blockchain_id,
        )
        self.blockchain_id = blockchain_id


class MissingRankingError(HarmonicaError):
    code = "missing-ranking"

    def __init__(self):
        super().__init__("recommendation report carries no ranking to preselect from")


# --- template engine --------------------------------------------------------

class TemplateParseError(HarmonicaError):
    code = "template-parse-error"

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}", line=line)
        self.line = line


class UnknownVariableError(HarmonicaError):
    code = "unknown-variable"

    def __init__(self, name: str):
        super().__init__(f"unknown template variable: {name!r}", name=name)
        self.name = name


class UnbalancedBlockError(HarmonicaError):
    code = "unbalanced-block"

    def __init__(self, feature_id: str, message: str):
        super().__init__(message, feature_id=feature_id)
        self.feature_id = feature_id


class PathCollisionError(HarmonicaError):
    code = "path-collision"

    def __init__(self, path: str, asset_ids):
        super().__init__(
            f"assets {', '.join(sorted(asset_ids))} render to the same path: {path}",
            path=path,
            assets=sorted(asset_ids),
        )
        self.path = path


class InvalidRequestError(HarmonicaError):
    """Malformed input document (profile, configuration, request body)."""

    code = "invalid-request"
