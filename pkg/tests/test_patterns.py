from harmonica.blade import parse_profile, recommend_patterns

from tests.conftest import profile_from


def test_missing_capability_excludes_pattern(kb):
    chain_e = kb.blockchain("chain-e")  # no smart-contracts capability
    profile = profile_from(levels={"scalability": "desirable"})
    recommendations = {r.pattern_id: r for r in recommend_patterns(profile, chain_e, kb)}
    assert recommendations["state-channels"].excluded_reason == "missing capability: smart-contracts"
    assert recommendations["state-channels"].score is None
    # payment-channels misses two capabilities, both named
    assert recommendations["payment-channels"].excluded_reason == (
        "missing capability: smart-contracts, tokenization"
    )


def test_score_is_sum_of_active_levels(kb):
    chain_b = kb.blockchain("chain-b")
    profile = profile_from(levels={"confidentiality": "extremely-desirable"})
    recommendations = {r.pattern_id: r for r in recommend_patterns(profile, chain_b, kb)}
    assert recommendations["off-chain-data-storage"].score == 4
    assert recommendations["off-chain-data-storage"].matched_attributes == ("confidentiality",)


def test_required_attribute_counts_at_maximal_level(kb):
    chain_b = kb.blockchain("chain-b")
    profile = profile_from(required={"immutability": 3})
    recommendations = {r.pattern_id: r for r in recommend_patterns(profile, chain_b, kb)}
    assert recommendations["immutable-contract-sealing"].score == 4


def test_empty_profile_scores_zero_ordered_by_id(kb):
    chain_b = kb.blockchain("chain-b")  # has smart-contracts, lacks tokenization/data-pruning
    recommendations = recommend_patterns(parse_profile({"requirements": {}}), chain_b, kb)
    included = [r for r in recommendations if r.excluded_reason is None]
    assert all(r.score == 0 for r in included)
    assert [r.pattern_id for r in included] == sorted(r.pattern_id for r in included)
    # excluded entries trail the list
    assert [r.excluded_reason is None for r in recommendations] == sorted(
        [r.excluded_reason is None for r in recommendations], reverse=True
    )


def test_conflicting_patterns_both_listed_with_annotations(kb):
    chain_b = kb.blockchain("chain-b")
    profile = profile_from(
        levels={"modifiability": "desirable", "immutability": "desirable"}
    )
    recommendations = {r.pattern_id: r for r in recommend_patterns(profile, chain_b, kb)}
    proxy = recommendations["upgradeable-contract-proxy"]
    sealing = recommendations["immutable-contract-sealing"]
    assert proxy.excluded_reason is None and sealing.excluded_reason is None
    assert proxy.conflicts_with == ("immutable-contract-sealing",)
    assert sealing.conflicts_with == ("upgradeable-contract-proxy",)


def test_sorted_by_score_then_id(kb, example_profile):
    chain_c = kb.blockchain("chain-c")
    recommendations = recommend_patterns(example_profile, chain_c, kb)
    included = [r for r in recommendations if r.excluded_reason is None]
    keys = [(-r.score, r.pattern_id) for r in included]
    assert keys == sorted(keys)
