"""Small feature models (<= 15 features) used by semantics tests.

Each entry exercises a different interaction of tree rules, groups, and
cross-tree constraints; all are small enough for exhaustive cross-checks.
"""


def _feature(fid, parent, variability="optional", group="none"):
    return {"id": fid, "name": fid, "parent": parent, "variability": variability, "group": group}


def _doc(features, constraints=()):
    return {
        "version": "1",
        "features": features,
        "constraints": list(constraints),
        "blockchain_feature_map": {},
        "pattern_feature_map": {},
    }


MODEL_DOCS = {
    "single-root": _doc([_feature("root", None, "mandatory")]),
    "mandatory-chain": _doc(
        [
            _feature("root", None, "mandatory"),
            _feature("a", "root", "mandatory"),
            _feature("b", "a", "mandatory"),
            _feature("c", "b"),
        ]
    ),
    "xor-five-plus-optional": _doc(
        [
            _feature("root", None, "mandatory", "none"),
            _feature("hub", "root", "mandatory", "xor"),
            _feature("x1", "hub"),
            _feature("x2", "hub"),
            _feature("x3", "hub"),
            _feature("x4", "hub"),
            _feature("x5", "hub"),
            _feature("extra", "root"),
        ]
    ),
    "or-pair": _doc(
        [
            _feature("root", None, "mandatory", "or"),
            _feature("a", "root"),
            _feature("b", "root"),
        ]
    ),
    "or-three-under-optional": _doc(
        [
            _feature("root", None, "mandatory"),
            _feature("menu", "root", "optional", "or"),
            _feature("a", "menu"),
            _feature("b", "menu"),
            _feature("c", "menu"),
        ]
    ),
    "requires-chain": _doc(
        [
            _feature("root", None, "mandatory"),
            _feature("a", "root"),
            _feature("b", "root"),
            _feature("c", "root"),
        ],
        [
            {"kind": "requires", "from": "a", "to": "b"},
            {"kind": "requires", "from": "b", "to": "c"},
        ],
    ),
    "excludes-triangle": _doc(
        [
            _feature("root", None, "mandatory"),
            _feature("a", "root"),
            _feature("b", "root"),
            _feature("c", "root"),
        ],
        [
            {"kind": "excludes", "from": "a", "to": "b"},
            {"kind": "excludes", "from": "b", "to": "c"},
            {"kind": "excludes", "from": "a", "to": "c"},
        ],
    ),
    "requires-into-xor": _doc(
        [
            _feature("root", None, "mandatory"),
            _feature("mode", "root", "mandatory", "xor"),
            _feature("fast", "mode"),
            _feature("safe", "mode"),
            _feature("audit", "root"),
        ],
        [{"kind": "requires", "from": "audit", "to": "safe"}],
    ),
    "excludes-across-groups": _doc(
        [
            _feature("root", None, "mandatory"),
            _feature("g1", "root", "mandatory", "xor"),
            _feature("a1", "g1"),
            _feature("a2", "g1"),
            _feature("g2", "root", "optional", "or"),
            _feature("b1", "g2"),
            _feature("b2", "g2"),
        ],
        [{"kind": "excludes", "from": "a1", "to": "b1"}],
    ),
    "deep-nesting": _doc(
        [
            _feature("root", None, "mandatory"),
            _feature("l1", "root"),
            _feature("l2", "l1", "mandatory"),
            _feature("l3", "l2", "optional", "xor"),
            _feature("p", "l3"),
            _feature("q", "l3"),
        ]
    ),
    "mixed-constraints": _doc(
        [
            _feature("root", None, "mandatory"),
            _feature("core", "root", "mandatory"),
            _feature("opt-a", "root"),
            _feature("opt-b", "root"),
            _feature("opt-c", "root"),
            _feature("group", "root", "optional", "or"),
            _feature("m1", "group"),
            _feature("m2", "group"),
        ],
        [
            {"kind": "requires", "from": "opt-a", "to": "opt-b"},
            {"kind": "excludes", "from": "opt-b", "to": "opt-c"},
            {"kind": "requires", "from": "m2", "to": "opt-c"},
        ],
    ),
    "fixture-mini": _doc(
        [
            _feature("root", None, "mandatory"),
            _feature("platform", "root", "mandatory", "xor"),
            _feature("p1", "platform"),
            _feature("p2", "platform"),
            _feature("p3", "platform"),
            _feature("addons", "root", "optional", "or"),
            _feature("a1", "addons"),
            _feature("a2", "addons"),
            _feature("tooling", "root", "mandatory"),
            _feature("cli", "tooling", "mandatory"),
            _feature("dashboard", "tooling"),
        ],
        [
            {"kind": "excludes", "from": "p3", "to": "addons"},
            {"kind": "requires", "from": "dashboard", "to": "a1"},
        ],
    ),
}


def load_zoo():
    from harmonica.banco import parse_feature_model

    return {name: parse_feature_model(doc) for name, doc in MODEL_DOCS.items()}
