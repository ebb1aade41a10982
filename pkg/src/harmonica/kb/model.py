"""Domain types for the knowledge base.

All types are frozen: a loaded knowledge base is immutable and safe to share
across concurrent readers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import NotFoundError

KEBAB_CASE = re.compile(r"^[a-z0-9]+(-[a-z0-9]+)*$")

GOVERNANCE_KINDS = ("public", "private", "consortium")
ASSET_KINDS = (
    "contract-template",
    "offchain-template",
    "network-config-template",
    "bootstrap-script-template",
)
DIRECTIONS = ("benefit", "cost")


@dataclass(frozen=True)
class AttributeDefinition:
    """One ranking criterion: a non-functional quality scored 1..5 per chain."""

    id: str
    name: str
    description: str
    direction: str  # "benefit" or "cost"
    scale_min: int = 1
    scale_max: int = 5

    def in_scale(self, score: int) -> bool:
        return self.scale_min <= score <= self.scale_max


@dataclass(frozen=True)
class BlockchainDescriptor:
    id: str
    name: str
    governance: str
    scores: dict[str, int]  # attribute id -> ordinal level
    capabilities: frozenset[str]


@dataclass(frozen=True)
class PatternDescriptor:
    id: str
    name: str
    category: str
    intent: str
    addresses: frozenset[str]  # attribute ids the pattern improves
    requires_capabilities: frozenset[str]
    conflicts_with: frozenset[str]  # pattern ids, symmetric after load
    variant_of: str | None = None


@dataclass(frozen=True)
class ConflictRule:
    """Unordered attribute pair that must not both be demanded strongly.

    ``threshold`` is the preference level at or above which a side counts as
    triggering; see blade.conflicts for the severity rules.
    """

    left: str
    right: str
    threshold: int  # PreferenceLevel ordinal
    explanation: str

    def pair(self) -> frozenset[str]:
        return frozenset((self.left, self.right))

    def other_side(self, attribute_id: str) -> str:
        return self.right if attribute_id == self.left else self.left


@dataclass(frozen=True)
class CoreAsset:
    id: str
    kind: str
    activating_features: frozenset[str]
    output_path_template: str
    body: str


@dataclass(frozen=True)
class KnowledgeBase:
    attributes: tuple[AttributeDefinition, ...]
    blockchains: tuple[BlockchainDescriptor, ...]
    patterns: tuple[PatternDescriptor, ...]
    conflict_rules: tuple[ConflictRule, ...]
    assets: tuple[CoreAsset, ...]
    version: str
    _by_kind: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._by_kind.update(
            attribute={a.id: a for a in self.attributes},
            blockchain={b.id: b for b in self.blockchains},
            pattern={p.id: p for p in self.patterns},
            asset={a.id: a for a in self.assets},
        )

    @property
    def attribute_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.attributes)

    def attribute(self, attribute_id: str) -> AttributeDefinition:
        return self.lookup("attribute", attribute_id)

    def blockchain(self, blockchain_id: str) -> BlockchainDescriptor:
        return self.lookup("blockchain", blockchain_id)

    def has(self, kind: str, entity_id: str) -> bool:
        return entity_id in self._by_kind.get(kind, {})

    def lookup(self, kind: str, entity_id: str):
        """Exact-id lookup; raises NotFoundError for unknown ids."""
        try:
            table = self._by_kind[kind]
        except KeyError:
            raise ValueError(f"unknown entity kind: {kind!r}")
        if entity_id not in table:
            raise NotFoundError(kind, entity_id)
        return table[entity_id]


def lookup(kb: KnowledgeBase, entity_kind: str, entity_id: str):
    return kb.lookup(entity_kind, entity_id)
