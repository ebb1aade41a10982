"""Minimal deterministic template language for core assets.

Grammar (bit-exact, no escaping):

    document   := ( literal | variable | block )*
    variable   := "{{" IDENT "}}"
    block      := "{{#feature " IDENT "}}" document "{{/feature}}"
    IDENT      := [a-z0-9-]+

Any other occurrence of ``{{`` is a parse error; a literal ``{{`` cannot be
produced. Rendering substitutes variables and keeps a block's body iff its
feature id is selected. Output is a pure function of (template, variables,
selected features), which is what makes product generation hash-stable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import TemplateParseError, UnbalancedBlockError, UnknownVariableError

_OPEN = "{{"
_VAR = re.compile(r"\{\{([a-z0-9-]+)\}\}")
_BLOCK_OPEN = re.compile(r"\{\{#feature ([a-z0-9-]+)\}\}")
_BLOCK_CLOSE = "{{/feature}}"


@dataclass(frozen=True)
class TextNode:
    text: str


@dataclass(frozen=True)
class VariableNode:
    name: str


@dataclass(frozen=True)
class FeatureBlockNode:
    feature_id: str
    body: tuple


@dataclass(frozen=True)
class Template:
    """A parsed template document."""

    nodes: tuple

    def render(self, variables: dict[str, str], selected_features) -> str:
        selected = set(selected_features)
        out: list[str] = []
        _render_nodes(self.nodes, variables, selected, out)
        return "".join(out)

    def variable_names(self) -> frozenset[str]:
        names: set[str] = set()
        _collect_variables(self.nodes, names)
        return frozenset(names)


def parse_template(text: str) -> Template:
    """Parse template text; raises on malformed tags and unbalanced blocks."""
    nodes, pos = _parse_nodes(text, 0, stack=[])
    assert pos == len(text)
    return Template(tuple(nodes))


def render_template(template: Template | str, variables: dict[str, str], selected_features) -> str:
    if isinstance(template, str):
        template = parse_template(template)
    return template.render(variables, selected_features)


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def _parse_nodes(text: str, pos: int, stack: list):
    """Parse until end of input or the close tag matching the top of stack."""
    nodes: list = []
    while True:
        brace = text.find(_OPEN, pos)
        if brace < 0:
            if pos < len(text):
                nodes.append(TextNode(text[pos:]))
            if stack:
                raise UnbalancedBlockError(
                    stack[-1], f"feature block {stack[-1]!r} is never closed"
                )
            return nodes, len(text)
        if brace > pos:
            nodes.append(TextNode(text[pos:brace]))
            pos = brace

        if text.startswith(_BLOCK_CLOSE, pos):
            if not stack:
                raise UnbalancedBlockError(
                    "", f"line {_line_of(text, pos)}: close tag without an open feature block"
                )
            return nodes, pos + len(_BLOCK_CLOSE)

        open_match = _BLOCK_OPEN.match(text, pos)
        if open_match:
            feature_id = open_match.group(1)
            stack.append(feature_id)
            body, pos = _parse_nodes(text, open_match.end(), stack)
            stack.pop()
            nodes.append(FeatureBlockNode(feature_id, tuple(body)))
            continue

        var_match = _VAR.match(text, pos)
        if var_match:
            nodes.append(VariableNode(var_match.group(1)))
            pos = var_match.end()
            continue

        raise TemplateParseError(
            "malformed tag: '{{' must start a variable or feature block",
            line=_line_of(text, pos),
        )


def _render_nodes(nodes, variables, selected, out):
    for node in nodes:
        if isinstance(node, TextNode):
            out.append(node.text)
        elif isinstance(node, VariableNode):
            if node.name not in variables:
                raise UnknownVariableError(node.name)
            out.append(variables[node.name])
        else:
            if node.feature_id in selected:
                _render_nodes(node.body, variables, selected, out)


def _collect_variables(nodes, names):
    for node in nodes:
        if isinstance(node, VariableNode):
            names.add(node.name)
        elif isinstance(node, FeatureBlockNode):
            _collect_variables(node.body, names)
