import numpy as np
import pytest
from sklearn.exceptions import NotFittedError

from wavescreen.classifiers import (
    LinearSVM,
    PNNClassifier,
    SelfOrganizingMap,
    evaluate,
    majority_unit_labels,
)

from oracles import best_linear_split, pnn_scores_direct, two_means_exhaustive


def two_gaussians(seed=123, n=100, offset=2.0):
    rng = np.random.default_rng(seed)
    X = np.vstack(
        [rng.normal(loc=(-offset, -offset), size=(n, 2)),
         rng.normal(loc=(offset, offset), size=(n, 2))]
    )
    y = np.array([-1] * n + [1] * n)
    return X, y


# ------------------------------------------------------------------ SVM


def test_svm_two_points():
    svm = LinearSVM(lam=0.1, epochs=50, seed=0).fit([[-1.0], [1.0]], [-1, 1])
    np.testing.assert_array_equal(svm.predict([[-1.0], [1.0]]), [-1, 1])


def test_svm_xor_cannot_exceed_three_quarters():
    X = np.array([[0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0]])
    y = np.array([-1, -1, 1, 1])
    svm = LinearSVM(lam=0.01, epochs=100, seed=0).fit(X, y)
    assert np.mean(svm.predict(X) == y) <= 0.75


def test_svm_two_gaussians_vs_grid_oracle():
    X, y = two_gaussians()
    svm = LinearSVM(lam=0.01, epochs=50, seed=3).fit(X, y)
    acc = np.mean(svm.predict(X) == y)
    assert acc >= 0.97
    # the brute-force linear-split oracle bounds what is achievable
    assert acc <= best_linear_split(X, y) + 1e-12


def test_svm_zero_decision_predicts_positive():
    svm = LinearSVM(lam=0.1, epochs=5, seed=0).fit([[-1.0], [1.0]], [-1, 1])
    svm.weights_ = np.array([0.0])
    svm.bias_ = 0.0
    np.testing.assert_array_equal(svm.predict([[5.0]]), [1])


def test_svm_margin_matches_dot_product():
    X, y = two_gaussians(seed=9, n=30)
    svm = LinearSVM(lam=0.05, epochs=20, seed=1).fit(X, y)
    v = np.array([0.3, -1.2])
    expected = float(np.dot(svm.weights_, v) + svm.bias_)
    assert abs(svm.decision_function([v])[0] - expected) < 1e-12


def test_svm_objective_history_non_increasing():
    X, y = two_gaussians(seed=5)
    svm = LinearSVM(lam=0.01, epochs=30, seed=2).fit(X, y)
    diffs = np.diff(svm.objective_history_)
    assert np.all(diffs <= 1e-6)
    assert svm.objective_history_[-1] <= svm.objective_history_[0]


def test_svm_deterministic():
    X, y = two_gaussians(seed=8)
    a = LinearSVM(lam=0.01, epochs=10, seed=4).fit(X, y)
    b = LinearSVM(lam=0.01, epochs=10, seed=4).fit(X, y)
    np.testing.assert_array_equal(a.weights_, b.weights_)
    assert a.bias_ == b.bias_


def test_svm_scale_equivariant_predictions():
    X, y = two_gaussians(seed=11)
    base = LinearSVM(lam=0.01, epochs=40, seed=5).fit(X, y)
    base_pred = base.predict(X)
    for c in (0.5, 2.0, 10.0):
        scaled = LinearSVM(lam=0.01 / c**2, epochs=40, seed=5).fit(c * X, y)
        np.testing.assert_array_equal(scaled.predict(c * X), base_pred)


def test_svm_input_validation():
    with pytest.raises(ValueError, match="both classes"):
        LinearSVM().fit([[1.0], [2.0]], [1, 1])
    with pytest.raises(ValueError, match="-1"):
        LinearSVM().fit([[1.0], [2.0]], [0, 1])
    with pytest.raises(ValueError, match="epochs"):
        LinearSVM(epochs=0).fit([[1.0], [2.0]], [-1, 1])
    svm = LinearSVM(lam=0.1, epochs=2, seed=0).fit([[-1.0], [1.0]], [-1, 1])
    with pytest.raises(ValueError, match="dims"):
        svm.predict([[1.0, 2.0]])
    with pytest.raises(NotFittedError):
        LinearSVM().predict([[1.0]])


# ------------------------------------------------------------------ SOM


def test_som_single_unit_single_step():
    som = SelfOrganizingMap(width=1, height=1, lr0=1.0, lr_final=1.0,
                            r0=1.0, r_final=1.0, epochs=1, seed=0)
    som.fit([[3.0, -2.0]])
    np.testing.assert_allclose(som.weights_[0], [3.0, -2.0], atol=1e-12)


def test_som_two_clusters_match_two_means_oracle():
    rng = np.random.default_rng(42)
    X = np.vstack(
        [rng.normal(loc=(-5.0, -5.0), scale=0.5, size=(40, 2)),
         rng.normal(loc=(5.0, 5.0), scale=0.5, size=(40, 2))]
    )
    som = SelfOrganizingMap(width=2, height=1, epochs=20, seed=1).fit(X)
    assign = som.assign(X)
    oracle = two_means_exhaustive(X)
    purity = max(np.mean(assign == oracle), np.mean(assign == 1 - oracle))
    assert purity >= 0.95
    # each unit lands near a distinct cluster center
    centers = np.array([[-5.0, -5.0], [5.0, 5.0]])
    d = np.sqrt(((som.weights_[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2))
    best = d.argmin(axis=1)
    assert set(best) == {0, 1}
    assert d.min(axis=1).max() < 1.0


def test_som_zero_epochs_rejected():
    with pytest.raises(ValueError, match="epochs"):
        SelfOrganizingMap(epochs=0).fit([[1.0]])


def test_som_empty_input_rejected():
    with pytest.raises(ValueError):
        SelfOrganizingMap().fit(np.empty((0, 2)))


def test_som_assign_exact_and_ties():
    som = SelfOrganizingMap(width=2, height=1)
    som.weights_ = np.array([[0.0, 0.0], [2.0, 0.0]])
    som.grid_coords_ = np.array([[0.0, 0.0], [0.0, 1.0]])
    assert som.assign([[2.0, 0.0]])[0] == 1
    assert som.assign([[1.0, 0.0]])[0] == 0  # equidistant -> lowest index


def test_som_quantization_error_hand_values():
    som = SelfOrganizingMap(width=2, height=1)
    som.weights_ = np.array([[0.0], [4.0]])
    som.grid_coords_ = np.array([[0.0, 0.0], [0.0, 1.0]])
    # distances to BMUs: 1, 1, 0 -> mean 2/3
    err = som.quantization_error([[1.0], [3.0], [4.0]])
    assert abs(err - 2.0 / 3.0) < 1e-12


def test_som_training_reduces_quantization_error():
    rng = np.random.default_rng(7)
    X = rng.normal(size=(60, 3))
    for seed in (0, 1, 2):
        som = SelfOrganizingMap(width=3, height=3, epochs=10, seed=seed)
        init = SelfOrganizingMap(width=3, height=3, epochs=1, seed=seed)
        # initial weights: same seeded draw, before any updates
        rng_init = np.random.default_rng(seed)
        lo, hi = X.min(axis=0), X.max(axis=0)
        w0 = rng_init.uniform(size=(9, 3)) * (hi - lo) + lo
        init.weights_ = w0
        init.grid_coords_ = som_grid_coords(3, 3)
        som.fit(X)
        assert som.quantization_error(X) <= init.quantization_error(X)


def som_grid_coords(width, height):
    return np.stack(
        [np.repeat(np.arange(height), width), np.tile(np.arange(width), height)],
        axis=1,
    ).astype(np.float64)


def test_som_deterministic():
    rng = np.random.default_rng(10)
    X = rng.normal(size=(20, 2))
    a = SelfOrganizingMap(width=2, height=2, epochs=5, seed=3).fit(X)
    b = SelfOrganizingMap(width=2, height=2, epochs=5, seed=3).fit(X)
    np.testing.assert_array_equal(a.weights_, b.weights_)


def test_majority_unit_labels():
    som = SelfOrganizingMap(width=2, height=1)
    som.weights_ = np.array([[0.0], [10.0]])
    som.grid_coords_ = som_grid_coords(2, 1)
    X = np.array([[0.1], [0.2], [9.9], [10.1], [0.3]])
    y = np.array([0, 0, 1, 1, 1])
    labels = majority_unit_labels(som, X, y)
    np.testing.assert_array_equal(labels, [0, 1])


# ------------------------------------------------------------------ PNN


def test_pnn_stored_vector_wins_with_small_sigma():
    X = np.array([[0.0, 0.0], [5.0, 5.0], [5.0, 6.0]])
    y = np.array([0, 1, 1])
    pnn = PNNClassifier().fit(X, y)
    assert pnn.predict([[0.0, 0.0]], sigma=0.01)[0] == 0
    assert pnn.predict([[5.0, 5.0]], sigma=0.01)[0] == 1


def test_pnn_midpoint_tie_gives_lowest_class():
    pnn = PNNClassifier().fit(np.array([[0.0], [2.0]]), np.array([0, 1]))
    assert pnn.predict([[1.0]], sigma=0.5)[0] == 0


def test_pnn_mixed_density_matches_direct_oracle():
    X = np.array([[0.0], [0.5], [1.0], [4.0], [4.5]])
    y = np.array([0, 0, 0, 1, 1])
    pnn = PNNClassifier().fit(X, y)
    by_class = {0: X[:3], 1: X[3:]}
    for q in (np.array([0.7]), np.array([2.2]), np.array([3.0]), np.array([5.0])):
        direct = pnn_scores_direct(by_class, q, sigma=1.5)
        expected = min(
            direct, key=lambda label: (-direct[label], label)
        )
        assert pnn.predict([q], sigma=1.5)[0] == expected
        # normalized scores match the direct ratio as well
        got = pnn.class_scores([q], sigma=1.5)[0]
        total = direct[0] + direct[1]
        np.testing.assert_allclose(got, [direct[0] / total, direct[1] / total], atol=1e-12)


def test_pnn_sigma_to_zero_is_nearest_neighbor():
    rng = np.random.default_rng(13)
    X = rng.uniform(-5, 5, size=(40, 3))
    y = rng.integers(0, 3, size=40)
    pnn = PNNClassifier().fit(X, y)
    queries = rng.uniform(-5, 5, size=(25, 3))
    for q in queries:
        d = np.sqrt(((X - q) ** 2).sum(axis=1))
        # skip queries whose nearest neighbor is not unique
        order = np.sort(d)
        if order[1] - order[0] < 1e-6:
            continue
        assert pnn.predict([q], sigma=1e-3)[0] == y[np.argmin(d)]


def test_pnn_errors():
    pnn = PNNClassifier().fit(np.array([[0.0], [1.0]]), np.array([0, 1]))
    with pytest.raises(ValueError, match="sigma"):
        pnn.predict([[0.0]], sigma=0.0)
    with pytest.raises(ValueError, match="dims"):
        pnn.predict([[0.0, 1.0]])
    with pytest.raises(ValueError, match=">= 0"):
        PNNClassifier().fit(np.array([[0.0]]), np.array([-1]))


# ------------------------------------------------------------------ evaluate


def test_evaluate_perfect_predictor():
    X = np.arange(6.0).reshape(6, 1)
    y = np.array([0, 0, 1, 1, 2, 2])
    report = evaluate(lambda X: y, X, y)
    assert report.accuracy == 1.0
    np.testing.assert_array_equal(report.confusion, np.diag([2, 2, 2]))


def test_evaluate_empty_rejected():
    with pytest.raises(ValueError, match="empty"):
        evaluate(lambda X: X, np.empty((0, 1)), np.array([], dtype=int))


def test_evaluate_confusion_layout():
    X = np.zeros((3, 1))
    y = np.array([0, 1, 1])
    pred = np.array([1, 1, 0])
    report = evaluate(lambda _: pred, X, y)
    np.testing.assert_array_equal(report.confusion, [[0, 1], [1, 1]])
    assert abs(report.accuracy - 1.0 / 3.0) < 1e-12


def test_evaluate_random_predictor_near_uniform():
    rng = np.random.default_rng(99)
    k = 4
    n = 2000
    y = rng.integers(0, k, size=n)
    pred = rng.integers(0, k, size=n)
    report = evaluate(lambda _: pred, np.zeros((n, 1)), y)
    assert abs(report.accuracy - 1.0 / k) < 0.05
