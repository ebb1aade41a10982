"""BANCO: the product-line configurator."""

from .configuration import (
    Configuration,
    RuleViolation,
    ValidityReport,
    complete_configuration,
    enumerate_configurations,
    parse_configuration,
    preselect_from_recommendation,
    validate_configuration,
)
from .features import CrossTreeConstraint, Feature, FeatureModel, load_feature_model, parse_feature_model
from .generator import ManifestEntry, ProductManifest, generate_product, product_archive, render_product
from .templates import Template, parse_template, render_template

__all__ = [
    "Configuration",
    "CrossTreeConstraint",
    "Feature",
    "FeatureModel",
    "ManifestEntry",
    "ProductManifest",
    "RuleViolation",
    "Template",
    "ValidityReport",
    "complete_configuration",
    "enumerate_configurations",
    "generate_product",
    "load_feature_model",
    "parse_configuration",
    "parse_feature_model",
    "parse_template",
    "preselect_from_recommendation",
    "product_archive",
    "render_product",
    "render_template",
    "validate_configuration",
]
