import numpy as np
import pytest

from harmonica.blade import DecisionMatrix, Criterion, WeightVector, explain, topsis_rank
from harmonica.errors import EmptyMatrixError, NotRankedError, WeightMismatchError

from tests.oracle_topsis import oracle_order, oracle_topsis


def _matrix(values, directions, ids=None):
    values = np.asarray(values, dtype=float)
    ids = ids or [f"alt-{i:02d}" for i in range(values.shape[0])]
    criteria = tuple(Criterion(f"c{j}", directions[j]) for j in range(values.shape[1]))
    return DecisionMatrix(tuple(ids), criteria, values)


def _weights(values):
    if isinstance(values, dict):
        return WeightVector(values)
    return WeightVector({f"c{j}": w for j, w in enumerate(values)})


def test_symmetric_matrix_ties_break_by_id():
    ranking = topsis_rank(
        _matrix([[5, 1], [1, 5], [3, 3]], ["benefit", "benefit"], ids=["a1", "a2", "a3"]),
        _weights([0.5, 0.5]),
    )
    assert [e.blockchain_id for e in ranking.entries] == ["a1", "a2", "a3"]
    for entry in ranking.entries:
        assert abs(entry.closeness - 0.5) < 1e-9


def test_single_alternative_closeness_half():
    ranking = topsis_rank(_matrix([[3, 2]], ["benefit", "cost"]), _weights([0.6, 0.4]))
    entry = ranking.entries[0]
    assert entry.closeness == 0.5 and entry.d_plus == 0.0 and entry.d_minus == 0.0


def test_dominating_alternative_ranks_first():
    ranking = topsis_rank(
        _matrix([[5, 5, 4], [1, 2, 3]], ["benefit", "benefit", "benefit"], ids=["dominator", "other"]),
        _weights([0.2, 0.3, 0.5]),
    )
    assert ranking.entries[0].blockchain_id == "dominator"
    assert ranking.entries[0].closeness >= ranking.entries[1].closeness


def test_oracle_equivalence_200_random_instances():
    rng = np.random.default_rng(42)
    for _ in range(200):
        m = int(rng.integers(2, 7))
        n = int(rng.integers(2, 15))
        values = rng.integers(1, 6, size=(m, n)).astype(float)
        directions = [str(rng.choice(["benefit", "cost"])) for _ in range(n)]
        raw = rng.random(n) + 0.01
        weights = raw / raw.sum()
        ids = [f"alt-{i:02d}" for i in range(m)]

        ranking = topsis_rank(
            _matrix(values, directions, ids), _weights([float(w) for w in weights])
        )
        closeness, d_plus, d_minus = oracle_topsis(values.tolist(), directions, list(weights))

        by_id = {e.blockchain_id: e for e in ranking.entries}
        for i, alt in enumerate(ids):
            assert abs(by_id[alt].closeness - closeness[i]) < 1e-9
            assert abs(by_id[alt].d_plus - d_plus[i]) < 1e-9
            assert abs(by_id[alt].d_minus - d_minus[i]) < 1e-9
        assert [e.blockchain_id for e in ranking.entries] == oracle_order(ids, closeness)


def test_dominance_preserved_in_1000_random_trials():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        m = int(rng.integers(2, 7))
        n = int(rng.integers(2, 15))
        # base scores 2..4 so the injected row strictly dominates within 1..5
        values = rng.integers(2, 5, size=(m, n)).astype(float)
        directions = [str(rng.choice(["benefit", "cost"])) for _ in range(n)]
        dominator = int(rng.integers(0, m))
        for j in range(n):
            column = np.delete(values[:, j], dominator)
            bump = 1.0 if directions[j] == "benefit" else -1.0
            best = column.max() if directions[j] == "benefit" else column.min()
            values[dominator, j] = best + bump
        raw = rng.random(n) + 0.01
        ranking = topsis_rank(
            _matrix(values, directions),
            _weights([float(w) for w in raw / raw.sum()]),
        )
        top = ranking.entries[0]
        assert top.blockchain_id == f"alt-{dominator:02d}"
        assert all(top.closeness >= e.closeness for e in ranking.entries[1:])


def test_column_scaling_changes_nothing():
    rng = np.random.default_rng(11)
    values = rng.integers(1, 6, size=(5, 6)).astype(float)
    directions = ["benefit", "cost", "benefit", "benefit", "cost", "benefit"]
    raw = rng.random(6) + 0.01
    weights = _weights([float(w) for w in raw / raw.sum()])
    base = topsis_rank(_matrix(values, directions), weights)
    for column in range(6):
        for factor in (0.1, 3, 1000):
            scaled = values.copy()
            scaled[:, column] *= factor
            ranking = topsis_rank(_matrix(scaled, directions), weights)
            for ours, theirs in zip(ranking.entries, base.entries):
                assert ours.blockchain_id == theirs.blockchain_id
                assert abs(ours.closeness - theirs.closeness) <= 1e-9


def test_criteria_permutation_equivariance():
    rng = np.random.default_rng(13)
    values = rng.integers(1, 6, size=(4, 7)).astype(float)
    directions = [str(rng.choice(["benefit", "cost"])) for _ in range(7)]
    raw = rng.random(7) + 0.01
    weights = raw / raw.sum()
    base = topsis_rank(
        _matrix(values, directions), _weights([float(w) for w in weights])
    )
    for _ in range(10):
        perm = rng.permutation(7)
        permuted = DecisionMatrix(
            tuple(f"alt-{i:02d}" for i in range(4)),
            tuple(Criterion(f"c{j}", directions[j]) for j in perm),
            values[:, perm],
        )
        ranking = topsis_rank(permuted, _weights({f"c{j}": float(weights[j]) for j in perm}))
        for ours, theirs in zip(ranking.entries, base.entries):
            assert ours.blockchain_id == theirs.blockchain_id
            assert abs(ours.closeness - theirs.closeness) <= 1e-12


def test_all_zero_column_normalizes_to_zero():
    ranking = topsis_rank(
        _matrix([[0, 2], [0, 4]], ["benefit", "benefit"]), _weights([0.5, 0.5])
    )
    for entry in ranking.entries:
        assert entry.contributions[0].weighted_value == 0.0


def test_empty_matrix_rejected():
    with pytest.raises(EmptyMatrixError):
        topsis_rank(
            DecisionMatrix((), (Criterion("c0", "benefit"),), np.zeros((0, 1))), _weights([1.0])
        )


def test_weight_mismatch_rejected():
    with pytest.raises(WeightMismatchError):
        topsis_rank(_matrix([[1, 2]], ["benefit", "benefit"]), WeightVector({"c0": 1.0}))
    with pytest.raises(WeightMismatchError):
        WeightVector({"a": 0.5, "b": 0.6})
    with pytest.raises(WeightMismatchError):
        WeightVector({"a": 1.2, "b": -0.2})


def test_explain_decomposes_distances(kb, example_profile):
    from harmonica.blade import recommend

    ranking = recommend(example_profile, kb).ranking
    for entry in ranking.entries:
        rows = explain(ranking, entry.blockchain_id)
        assert len(rows) <= 14
        assert sum(r.ideal_gap**2 for r in rows) == pytest.approx(entry.d_plus**2, abs=1e-9)
        assert sum(r.anti_ideal_gap**2 for r in rows) == pytest.approx(entry.d_minus**2, abs=1e-9)


def test_explain_unranked_id_rejected(kb, example_profile):
    from harmonica.blade import recommend

    ranking = recommend(example_profile, kb).ranking
    with pytest.raises(NotRankedError):
        explain(ranking, "chain-e")  # disqualified, not ranked


def test_explain_single_criterion_reproduces_distances():
    ranking = topsis_rank(_matrix([[5], [2], [4]], ["benefit"]), _weights([1.0]))
    for entry in ranking.entries:
        rows = explain(ranking, entry.blockchain_id)
        assert len(rows) == 1
        assert rows[0].ideal_gap == pytest.approx(entry.d_plus, abs=1e-12)
        assert rows[0].anti_ideal_gap == pytest.approx(entry.d_minus, abs=1e-12)
