#!/usr/bin/env python3
"""Author the fixture knowledge base, feature model, and example profile.

Regenerates fixtures/ deterministically; fixture content is illustrative
(the scores are internally consistent but invented) and the committed files
are the source of truth for tests.
"""

from __future__ import annotations

import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from harmonica.jsonio import canonical_json  # noqa: E402

FIXTURES = REPO / "fixtures"

ATTRIBUTES = [
    ("throughput", "Throughput", "Sustained transaction volume the network can absorb."),
    ("latency", "Latency", "How quickly submitted transactions reach finality; 5 means near-instant."),
    ("scalability", "Scalability", "Headroom for growing load, state size, and node count."),
    ("decentralization", "Decentralization", "How widely block production and governance are distributed."),
    ("immutability", "Immutability", "Resistance of recorded data to alteration or deletion."),
    ("modifiability", "Modifiability", "Ease of evolving deployed logic and stored structures."),
    ("confidentiality", "Confidentiality", "Ability to keep transaction payloads private between parties."),
    ("access-control", "Access control", "Granularity of permissions over who may join, read, and write."),
    ("transparency", "Transparency", "Public auditability of the ledger history."),
    ("cost-efficiency", "Cost efficiency", "Favorable ratio of fees and operating cost to workload."),
    ("energy-efficiency", "Energy efficiency", "Low energy footprint of consensus and operation."),
    ("maturity", "Maturity", "Track record, stability, and production hardening."),
    ("developer-support", "Developer support", "Tooling, documentation, and community depth."),
    ("smart-contract-expressiveness", "Smart contract expressiveness", "Power of the on-chain programming model."),
]

SCORE_ROWS = {
    # per-attribute ordinal levels, in ATTRIBUTES order
    "chain-a": [2, 2, 2, 5, 5, 1, 1, 1, 5, 2, 1, 5, 5, 4],
    "chain-b": [4, 4, 4, 3, 4, 2, 4, 4, 3, 4, 4, 4, 4, 4],
    "chain-c": [5, 5, 4, 2, 3, 4, 5, 5, 2, 4, 5, 3, 3, 3],
    "chain-d": [4, 4, 5, 4, 4, 2, 2, 2, 4, 3, 4, 2, 3, 5],
    "chain-e": [5, 5, 3, 1, 2, 4, 4, 5, 1, 5, 5, 3, 2, 1],
}

BLOCKCHAINS = [
    ("chain-a", "Chain A", "public", ["public-network", "smart-contracts", "tokenization"]),
    ("chain-b", "Chain B", "consortium", ["permissioning", "private-channels", "smart-contracts"]),
    ("chain-c", "Chain C", "private", ["data-pruning", "off-chain-storage", "permissioning", "smart-contracts"]),
    ("chain-d", "Chain D", "public", ["off-chain-storage", "public-network", "smart-contracts", "tokenization"]),
    ("chain-e", "Chain E", "private", ["data-pruning", "permissioning"]),
]

PATTERNS = [
    {
        "id": "off-chain-data-storage",
        "name": "Off-chain data storage",
        "category": "data-management",
        "intent": "Keep large or sensitive payloads off the ledger and anchor only their hashes on-chain.",
        "addresses": ["confidentiality", "cost-efficiency", "scalability"],
        "requires_capabilities": ["smart-contracts"],
        "conflicts_with": [],
        "variant_of": None,
    },
    {
        "id": "state-channels",
        "name": "State channels",
        "category": "scalability",
        "intent": "Move rapid interaction sequences off-chain and settle the net result on-chain.",
        "addresses": ["cost-efficiency", "latency", "scalability", "throughput"],
        "requires_capabilities": ["smart-contracts"],
        "conflicts_with": [],
        "variant_of": None,
    },
    {
        "id": "payment-channels",
        "name": "Payment channels",
        "category": "scalability",
        "intent": "State channels specialized to token transfers between two parties.",
        "addresses": ["latency", "throughput"],
        "requires_capabilities": ["smart-contracts", "tokenization"],
        "conflicts_with": [],
        "variant_of": "state-channels",
    },
    {
        "id": "onchain-access-control",
        "name": "On-chain access control",
        "category": "security",
        "intent": "Gate contract entry points through an on-chain permission registry.",
        "addresses": ["access-control", "confidentiality"],
        "requires_capabilities": ["smart-contracts"],
        "conflicts_with": [],
        "variant_of": None,
    },
    {
        "id": "upgradeable-contract-proxy",
        "name": "Upgradeable contract proxy",
        "category": "maintainability",
        "intent": "Route calls through a proxy so contract logic can be replaced after deployment.",
        "addresses": ["modifiability"],
        "requires_capabilities": ["smart-contracts"],
        "conflicts_with": ["immutable-contract-sealing"],
        "variant_of": None,
    },
    {
        "id": "immutable-contract-sealing",
        "name": "Immutable contract sealing",
        "category": "security",
        "intent": "Renounce every upgrade path so deployed logic is verifiably frozen.",
        "addresses": ["immutability", "transparency"],
        "requires_capabilities": ["smart-contracts"],
        "conflicts_with": ["upgradeable-contract-proxy"],
        "variant_of": None,
    },
    {
        "id": "ledger-pruning",
        "name": "Ledger pruning",
        "category": "data-management",
        "intent": "Discard expired payload data while keeping block headers verifiable.",
        "addresses": ["cost-efficiency", "energy-efficiency", "scalability"],
        "requires_capabilities": ["data-pruning"],
        "conflicts_with": [],
        "variant_of": None,
    },
    {
        "id": "token-distribution",
        "name": "Token distribution",
        "category": "economics",
        "intent": "Issue and allocate native tokens with an auditable emission schedule.",
        "addresses": ["cost-efficiency", "transparency"],
        "requires_capabilities": ["tokenization"],
        "conflicts_with": [],
        "variant_of": None,
    },
]

CONFLICT_RULES = [
    {
        "left": "immutability",
        "right": "modifiability",
        "threshold": "highly-desirable",
        "explanation": "A ledger cannot be both tamper-proof and easy to change; demanding both strongly cannot be satisfied.",
    },
    {
        "left": "decentralization",
        "right": "access-control",
        "threshold": "highly-desirable",
        "explanation": "Open participation and strict permissioning pull in opposite directions.",
    },
]

ASSETS = [
    {
        "id": "base-contract-stub",
        "kind": "contract-template",
        "activating_features": ["contracts"],
        "output_path_template": "contracts/{{project}}_app.sol",
        "body_file": "bodies/contract.sol.tmpl",
    },
    {
        "id": "bootstrap-script",
        "kind": "bootstrap-script-template",
        "activating_features": ["network-bootstrap"],
        "output_path_template": "scripts/bootstrap.sh",
        "body_file": "bodies/bootstrap.sh.tmpl",
    },
    {
        "id": "event-indexer-stub",
        "kind": "offchain-template",
        "activating_features": ["event-indexer"],
        "output_path_template": "offchain/indexer.py",
        "body_file": "bodies/indexer.py.tmpl",
    },
    {
        "id": "genesis-config",
        "kind": "network-config-template",
        "activating_features": ["network-bootstrap"],
        "output_path_template": "network/genesis.json",
        "body_file": "bodies/genesis.json.tmpl",
    },
    {
        "id": "network-node-config",
        "kind": "network-config-template",
        "activating_features": ["network-bootstrap"],
        "output_path_template": "network/node.conf",
        "body_file": "bodies/node.conf.tmpl",
    },
    {
        "id": "offchain-client-stub",
        "kind": "offchain-template",
        "activating_features": ["offchain-client"],
        "output_path_template": "offchain/client.py",
        "body_file": "bodies/client.py.tmpl",
    },
    {
        "id": "offchain-storage-config",
        "kind": "offchain-template",
        "activating_features": ["storage-offchain"],
        "output_path_template": "offchain/storage.yaml",
        "body_file": "bodies/storage.yaml.tmpl",
    },
]

FEATURES = [
    ("blockchain-app", "Blockchain application", None, "mandatory", "none"),
    ("platform", "Blockchain platform", "blockchain-app", "mandatory", "xor"),
    ("platform-chain-a", "Chain A platform", "platform", "optional", "none"),
    ("platform-chain-b", "Chain B platform", "platform", "optional", "none"),
    ("platform-chain-c", "Chain C platform", "platform", "optional", "none"),
    ("platform-chain-d", "Chain D platform", "platform", "optional", "none"),
    ("platform-chain-e", "Chain E platform", "platform", "optional", "none"),
    ("contracts", "Smart contract layer", "blockchain-app", "optional", "none"),
    ("contract-upgradeable", "Upgradeable proxy wiring", "contracts", "optional", "none"),
    ("contract-sealing", "Contract sealing", "contracts", "optional", "none"),
    ("integration", "Off-chain integration", "blockchain-app", "mandatory", "none"),
    ("offchain-client", "Chain client", "integration", "mandatory", "none"),
    ("event-indexer", "Event indexer", "integration", "optional", "none"),
    ("storage", "Payload storage", "blockchain-app", "optional", "xor"),
    ("storage-onchain", "On-chain storage", "storage", "optional", "none"),
    ("storage-offchain", "Off-chain storage", "storage", "optional", "none"),
    ("network", "Network provisioning", "blockchain-app", "mandatory", "none"),
    ("network-bootstrap", "Network bootstrap", "network", "mandatory", "none"),
]

CONSTRAINTS = [
    {"kind": "excludes", "from": "contract-upgradeable", "to": "contract-sealing"},
    {"kind": "excludes", "from": "platform-chain-e", "to": "contracts"},
    {"kind": "requires", "from": "event-indexer", "to": "contracts"},
]

EXAMPLE_PROFILE = {
    "requirements": {
        "throughput": {"level": "highly-desirable"},
        "latency": {"level": "desirable"},
        "confidentiality": {"level": "extremely-desirable"},
        "access-control": {"level": "highly-desirable"},
        "immutability": {"level": "desirable", "required": True, "min_level": 3},
        "cost-efficiency": {"level": "slightly-desirable"},
    }
}

VERSION = "1.0.0"


def write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path.relative_to(REPO)}")


def main() -> None:
    kb_dir = FIXTURES / "kb"
    write(
        kb_dir / "attributes.json",
        canonical_json(
            {
                "version": VERSION,
                "attributes": [
                    {
                        "id": attr_id,
                        "name": name,
                        "description": description,
                        "direction": "benefit",
                        "scale_min": 1,
                        "scale_max": 5,
                    }
                    for attr_id, name, description in ATTRIBUTES
                ],
            }
        ),
    )
    write(
        kb_dir / "blockchains.json",
        canonical_json(
            {
                "version": VERSION,
                "blockchains": [
                    {
                        "id": chain_id,
                        "name": name,
                        "governance": governance,
                        "scores": {
                            ATTRIBUTES[i][0]: SCORE_ROWS[chain_id][i] for i in range(len(ATTRIBUTES))
                        },
                        "capabilities": capabilities,
                    }
                    for chain_id, name, governance, capabilities in BLOCKCHAINS
                ],
            }
        ),
    )
    write(kb_dir / "patterns.json", canonical_json({"version": VERSION, "patterns": PATTERNS}))
    write(kb_dir / "conflict_rules.json", canonical_json({"version": VERSION, "conflict_rules": CONFLICT_RULES}))
    write(kb_dir / "assets.json", canonical_json({"version": VERSION, "assets": ASSETS}))

    write(
        FIXTURES / "feature_model.json",
        canonical_json(
            {
                "version": VERSION,
                "features": [
                    {"id": fid, "name": name, "parent": parent, "variability": variability, "group": group}
                    for fid, name, parent, variability, group in FEATURES
                ],
                "constraints": CONSTRAINTS,
                "blockchain_feature_map": {
                    chain_id: f"platform-{chain_id}" for chain_id, _, _, _ in BLOCKCHAINS
                },
                "pattern_feature_map": {
                    "off-chain-data-storage": "storage-offchain",
                    "upgradeable-contract-proxy": "contract-upgradeable",
                },
            }
        ),
    )

    write(FIXTURES / "profiles" / "example.json", canonical_json(EXAMPLE_PROFILE))


if __name__ == "__main__":
    main()
