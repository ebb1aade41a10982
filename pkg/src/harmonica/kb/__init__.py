"""Knowledge base: attribute catalog, blockchains, patterns, rules, assets."""

from .linter import ValidationIssue, ValidationReport, validate_knowledge_base
from .loader import load_knowledge_base, parse_knowledge_base, serialize_knowledge_base
from .model import (
    AttributeDefinition,
    BlockchainDescriptor,
    ConflictRule,
    CoreAsset,
    KnowledgeBase,
    PatternDescriptor,
    lookup,
)

__all__ = [
    "AttributeDefinition",
    "BlockchainDescriptor",
    "ConflictRule",
    "CoreAsset",
    "KnowledgeBase",
    "PatternDescriptor",
    "ValidationIssue",
    "ValidationReport",
    "load_knowledge_base",
    "lookup",
    "parse_knowledge_base",
    "serialize_knowledge_base",
    "validate_knowledge_base",
]
