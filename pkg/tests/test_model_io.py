import numpy as np
import pytest

from wavescreen.classifiers import (
    LinearSVM,
    PNNClassifier,
    SelfOrganizingMap,
    majority_unit_labels,
)
from wavescreen.model_io import MAGIC, load_model, save_model


def fixture_data(seed=0, n=30):
    rng = np.random.default_rng(seed)
    X = np.vstack(
        [rng.normal(loc=-2.0, size=(n, 3)), rng.normal(loc=2.0, size=(n, 3))]
    )
    y = np.array([0] * n + [1] * n)
    return X, y


def test_svm_round_trip_bit_exact():
    X, y = fixture_data()
    svm = LinearSVM(lam=0.03, epochs=15, seed=2).fit(X, np.where(y == 0, -1, 1))
    svm.label_map_ = [0, 1]
    text = save_model(svm)
    assert text.startswith(MAGIC)
    loaded = load_model(text)
    np.testing.assert_array_equal(loaded.weights_, svm.weights_)
    assert loaded.bias_ == svm.bias_
    assert loaded.lam == svm.lam
    assert loaded.label_map_ == [0, 1]
    np.testing.assert_array_equal(loaded.predict(X), svm.predict(X))


def test_som_round_trip_bit_exact():
    X, y = fixture_data(seed=1)
    som = SelfOrganizingMap(width=2, height=2, epochs=5, seed=3).fit(X)
    som.unit_labels_ = majority_unit_labels(som, X, y)
    loaded = load_model(save_model(som))
    np.testing.assert_array_equal(loaded.weights_, som.weights_)
    np.testing.assert_array_equal(loaded.unit_labels_, som.unit_labels_)
    np.testing.assert_array_equal(loaded.assign(X), som.assign(X))


def test_pnn_round_trip_bit_exact():
    X, y = fixture_data(seed=2)
    pnn = PNNClassifier().fit(X, y)
    loaded = load_model(save_model(pnn))
    np.testing.assert_array_equal(loaded.train_X_, pnn.train_X_)
    np.testing.assert_array_equal(loaded.train_y_, pnn.train_y_)
    q = np.array([[0.1, -0.5, 2.0]])
    np.testing.assert_array_equal(
        loaded.predict(q, sigma=0.7), pnn.predict(q, sigma=0.7)
    )
    np.testing.assert_array_equal(
        loaded.class_scores(q, sigma=0.7), pnn.class_scores(q, sigma=0.7)
    )


def test_seventeen_digit_floats_round_trip():
    svm = LinearSVM(lam=1.0 / 3.0)
    svm.weights_ = np.array([np.pi, 1.0 / 3.0, 1e-300, -2.5e17])
    svm.bias_ = np.nextafter(1.0, 2.0)
    loaded = load_model(save_model(svm))
    np.testing.assert_array_equal(loaded.weights_, svm.weights_)
    assert loaded.bias_ == svm.bias_


def test_bad_magic_rejected():
    with pytest.raises(ValueError, match="WCSMODEL"):
        load_model("NOTAMODEL v9\nkind svm\n")


def test_unknown_kind_rejected():
    with pytest.raises(ValueError, match="kind"):
        load_model(f"{MAGIC}\nkind forest\n")


def test_truncated_file_rejected():
    X, y = fixture_data()
    pnn = PNNClassifier().fit(X, y)
    text = save_model(pnn)
    with pytest.raises(ValueError):
        load_model("\n".join(text.splitlines()[:5]))


def test_unfitted_model_rejected():
    with pytest.raises((TypeError, AttributeError)):
        save_model(LinearSVM())
