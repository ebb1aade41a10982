import pytest
from hypothesis import given
from hypothesis import strategies as st

from harmonica.banco import parse_template, render_template
from harmonica.errors import TemplateParseError, UnbalancedBlockError, UnknownVariableError


def test_variable_substitution():
    assert render_template("name={{project}}", {"project": "demo"}, set()) == "name=demo"


def test_feature_block_dropped_when_unselected():
    text = "{{#feature pruning}}prune: true{{/feature}}"
    assert render_template(text, {}, set()) == ""
    assert render_template(text, {}, {"pruning"}) == "prune: true"


def test_unknown_variable():
    with pytest.raises(UnknownVariableError) as excinfo:
        render_template("{{missing}}", {}, set())
    assert excinfo.value.name == "missing"


def test_nested_blocks():
    text = "a{{#feature x}}b{{#feature y}}c{{/feature}}d{{/feature}}e"
    assert render_template(text, {}, set()) == "ae"
    assert render_template(text, {}, {"x"}) == "abde"
    assert render_template(text, {}, {"x", "y"}) == "abcde"
    assert render_template(text, {}, {"y"}) == "ae"  # inner block is unreachable


def test_unclosed_block_rejected():
    with pytest.raises(UnbalancedBlockError) as excinfo:
        parse_template("{{#feature x}}body")
    assert excinfo.value.feature_id == "x"


def test_stray_close_rejected():
    with pytest.raises(UnbalancedBlockError):
        parse_template("body{{/feature}}")


@pytest.mark.parametrize(
    "text",
    [
        "{{",  # bare open
        "{{ space }}",  # idents cannot contain spaces
        "{{UPPER}}",  # idents are lowercase
        "{{#feature  two-spaces}}x{{/feature}}",  # exactly one space after #feature
        "{{#feature}}x{{/feature}}",  # missing ident
        "literal {{ brace",  # no escaping mechanism: literal '{{' is disallowed
    ],
)
def test_malformed_tags_rejected(text):
    with pytest.raises(TemplateParseError):
        parse_template(text)


def test_parse_error_reports_line():
    with pytest.raises(TemplateParseError) as excinfo:
        parse_template("ok line\nalso ok\nbad {{ here")
    assert excinfo.value.line == 3


def test_single_braces_are_literal():
    assert render_template("if (x) { return {y}; }", {}, set()) == "if (x) { return {y}; }"


def test_rendering_is_deterministic():
    text = "v={{v}}\n{{#feature a}}A{{/feature}}{{#feature b}}B{{/feature}}"
    outputs = {render_template(text, {"v": "1"}, {"a"}) for _ in range(20)}
    assert outputs == {"v=1\nA"}


@given(st.text(alphabet=st.characters(blacklist_characters="{"), max_size=200))
def test_brace_free_text_renders_unchanged(text):
    assert render_template(text, {}, set()) == text


@given(
    st.lists(
        st.tuples(
            st.sampled_from(["alpha", "beta-2", "g0"]),
            st.text(alphabet="ab \n", max_size=8),
        ),
        max_size=6,
    )
)
def test_blocks_keep_exactly_selected_bodies(parts):
    """Rendering keeps body text iff its wrapping feature is selected."""
    selected = {"alpha", "g0"}
    text = "".join(
        "{{#feature " + feature + "}}" + body + "{{/feature}}" for feature, body in parts
    )
    expected = "".join(body for feature, body in parts if feature in selected)
    assert render_template(text, {}, selected) == expected
