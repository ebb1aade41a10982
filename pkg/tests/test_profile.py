import pytest

from harmonica.blade import PreferenceLevel, parse_profile
from harmonica.errors import InvalidRequestError, UnknownAttributeError

from tests.conftest import profile_from


def test_defaults_to_indifferent():
    profile = parse_profile({"requirements": {}})
    req = profile.get("throughput")
    assert req.level == PreferenceLevel.INDIFFERENT
    assert not req.required and not req.active


def test_absent_and_explicit_indifferent_are_equivalent():
    explicit = parse_profile({"requirements": {"latency": {"level": "indifferent"}}})
    assert not explicit.is_active("latency")


def test_required_defaults_min_level_to_three():
    profile = parse_profile({"requirements": {"immutability": {"required": True}}})
    req = profile.get("immutability")
    assert req.required and req.min_level == 3
    assert req.effective_level == PreferenceLevel.EXTREMELY_DESIRABLE


def test_min_level_without_required_rejected():
    with pytest.raises(InvalidRequestError):
        parse_profile({"requirements": {"immutability": {"min_level": 3}}})


def test_unknown_level_label_rejected():
    with pytest.raises(InvalidRequestError):
        parse_profile({"requirements": {"latency": {"level": "very-nice"}}})


def test_unknown_field_rejected():
    with pytest.raises(InvalidRequestError):
        parse_profile({"requirements": {"latency": {"weight": 2}}})
    with pytest.raises(InvalidRequestError):
        parse_profile({"prefs": {}})


def test_unknown_attribute_surfaces_on_validation(kb):
    profile = profile_from(levels={"latencyy": "desirable"})
    with pytest.raises(UnknownAttributeError) as excinfo:
        profile.validate_against(kb)
    assert excinfo.value.attribute_id == "latencyy"


def test_min_level_outside_scale_rejected(kb):
    profile = profile_from(required={"immutability": 9})
    with pytest.raises(InvalidRequestError):
        profile.validate_against(kb)


def test_payload_round_trip(example_profile):
    payload = example_profile.to_payload()
    assert parse_profile(payload) == example_profile
