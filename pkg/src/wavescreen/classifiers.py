"""Lightweight classifier back-ends over feature vectors.

All three estimators follow the scikit-learn fit/predict protocol, train
deterministically from (data, config, seed), and break every tie toward the
lowest index or class id.
"""

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .validation import as_feature_matrix


def _check_fitted(est, attr):
    if not hasattr(est, attr):
        raise NotFittedError(f"{type(est).__name__} is not fitted yet")


class LinearSVM(BaseEstimator):
    """Binary linear SVM trained by primal subgradient descent on the
    hinge loss plus (lam/2)||w||^2, with step size 1/(lam * t).

    The bias rides along as an augmented constant feature and the iterate
    is projected onto the ball of radius 1/sqrt(lam) after each step, which
    keeps the early large steps bounded. Samples are shuffled each epoch by
    a seeded RNG. The epoch-end snapshot with the lowest objective is kept,
    so the recorded objective history is non-increasing and the final
    objective never exceeds the initial one. Labels must be -1/+1; a zero
    decision value predicts +1.
    """

    def __init__(self, lam=0.01, epochs=20, seed=0):
        self.lam = lam
        self.epochs = epochs
        self.seed = seed

    def objective(self, X, y):
        _check_fitted(self, "weights_")
        return self._objective(self.weights_, self.bias_, as_feature_matrix(X), np.asarray(y))

    def _objective(self, w, b, X, y):
        margins = y * (X @ w + b)
        hinge = np.maximum(0.0, 1.0 - margins).mean()
        return float(0.5 * self.lam * (w @ w) + hinge)

    def fit(self, X, y):
        X = as_feature_matrix(X)
        y = np.asarray(y, dtype=np.float64)
        if y.shape != (X.shape[0],):
            raise ValueError("labels must be one per sample")
        present = set(np.unique(y))
        if not present <= {-1.0, 1.0}:
            raise ValueError(f"labels must be -1/+1, got {sorted(present)}")
        if len(present) < 2:
            raise ValueError("training data must contain both classes")
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs}")
        if self.lam <= 0:
            raise ValueError(f"lam must be > 0, got {self.lam}")

        rng = np.random.default_rng(self.seed)
        n = X.shape[0]
        Xa = np.hstack([X, np.ones((n, 1))])
        w = np.zeros(Xa.shape[1])
        radius = 1.0 / np.sqrt(self.lam)
        best_obj = self._objective(w[:-1], w[-1], X, y)
        best_w = w.copy()
        history = [best_obj]
        t = 0
        for _ in range(self.epochs):
            for i in rng.permutation(n):
                t += 1
                eta = 1.0 / (self.lam * t)
                violated = y[i] * (Xa[i] @ w) < 1.0
                w *= 1.0 - eta * self.lam
                if violated:
                    w += eta * y[i] * Xa[i]
                norm = np.sqrt(w @ w)
                if norm > radius:
                    w *= radius / norm
            obj = self._objective(w[:-1], w[-1], X, y)
            if obj < best_obj:
                best_obj, best_w = obj, w.copy()
            history.append(best_obj)
        self.weights_ = best_w[:-1]
        self.bias_ = float(best_w[-1])
        self.objective_history_ = np.array(history)
        return self

    def decision_function(self, X):
        _check_fitted(self, "weights_")
        X = as_feature_matrix(X)
        if X.shape[1] != self.weights_.size:
            raise ValueError(
                f"expected {self.weights_.size} dims, got {X.shape[1]}"
            )
        return X @ self.weights_ + self.bias_

    def predict(self, X):
        scores = self.decision_function(X)
        return np.where(scores >= 0.0, 1, -1)


class SelfOrganizingMap(BaseEstimator):
    """Kohonen map on a width x height grid.

    Weights start from a seeded uniform draw over the per-dimension data
    range. Each sample (in data order) updates every unit by
    lr(t) * exp(-grid_dist^2 / (2 r(t)^2)) * (x - w); lr and r decay
    exponentially from their initial to final values over the total step
    count. BMU ties resolve to the lowest flat index (row-major grid).
    """

    def __init__(self, width=2, height=2, lr0=0.5, lr_final=0.05,
                 r0=None, r_final=0.1, epochs=10, seed=0):
        self.width = width
        self.height = height
        self.lr0 = lr0
        self.lr_final = lr_final
        self.r0 = r0
        self.r_final = r_final
        self.epochs = epochs
        self.seed = seed

    def _schedules(self):
        r0 = self.r0 if self.r0 is not None else max(self.width, self.height) / 2.0
        if self.lr0 <= 0 or self.lr_final <= 0 or r0 <= 0 or self.r_final <= 0:
            raise ValueError("learning-rate and radius schedules must be positive")
        return self.lr0, self.lr_final, r0, self.r_final

    def fit(self, X, y=None):
        X = as_feature_matrix(X)
        if X.shape[0] < 1:
            raise ValueError("training data must be non-empty")
        if self.width < 1 or self.height < 1:
            raise ValueError("grid dims must be >= 1")
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs}")
        lr0, lr_final, r0, r_final = self._schedules()

        rng = np.random.default_rng(self.seed)
        units = self.width * self.height
        lo, hi = X.min(axis=0), X.max(axis=0)
        weights = rng.uniform(size=(units, X.shape[1])) * (hi - lo) + lo

        coords = np.stack(
            [np.repeat(np.arange(self.height), self.width),
             np.tile(np.arange(self.width), self.height)],
            axis=1,
        ).astype(np.float64)
        total = self.epochs * X.shape[0]
        t = 0
        for _ in range(self.epochs):
            for x in X:
                frac = t / total
                lr = lr0 * (lr_final / lr0) ** frac
                r = r0 * (r_final / r0) ** frac
                bmu = int(np.argmin(((weights - x) ** 2).sum(axis=1)))
                g2 = ((coords - coords[bmu]) ** 2).sum(axis=1)
                theta = np.exp(-g2 / (2.0 * r * r))
                weights += lr * theta[:, None] * (x - weights)
                t += 1
        self.weights_ = weights
        self.grid_coords_ = coords
        return self

    def assign(self, X):
        """Best-matching unit (flat row-major index) per sample."""
        _check_fitted(self, "weights_")
        X = as_feature_matrix(X)
        d2 = ((X[:, None, :] - self.weights_[None, :, :]) ** 2).sum(axis=2)
        return d2.argmin(axis=1)

    def quantization_error(self, X):
        """Mean Euclidean distance from each sample to its BMU weight."""
        _check_fitted(self, "weights_")
        X = as_feature_matrix(X)
        bmu = self.assign(X)
        return float(np.sqrt(((X - self.weights_[bmu]) ** 2).sum(axis=1)).mean())


def majority_unit_labels(som, X, y):
    """Label every SOM unit by majority vote of its assigned samples.

    Ties and empty units fall back to the lowest / globally most common
    label (ties again toward the lowest id).
    """
    X = as_feature_matrix(X)
    y = np.asarray(y, dtype=np.int64)
    if y.shape != (X.shape[0],) or y.size == 0:
        raise ValueError("need one label per sample and at least one sample")
    assignments = som.assign(X)
    classes = np.unique(y)
    global_counts = np.array([(y == c).sum() for c in classes])
    fallback = classes[int(np.argmax(global_counts))]
    labels = np.full(som.weights_.shape[0], fallback, dtype=np.int64)
    for u in range(som.weights_.shape[0]):
        members = y[assignments == u]
        if members.size:
            counts = np.array([(members == c).sum() for c in classes])
            labels[u] = classes[int(np.argmax(counts))]
    return labels


class PNNClassifier(BaseEstimator):
    """Parzen-window classifier: training is a single pass that stores the
    vectors; prediction scores each class by its mean Gaussian kernel and
    takes the argmax (ties toward the lowest class id).

    sigma is a predict-time parameter so one trained model serves a sweep;
    the constructor value is only the default. Scores are rescaled by the
    nearest stored point before exponentiation, which leaves the argmax
    unchanged and keeps tiny sigmas finite.
    """

    def __init__(self, sigma=1.0):
        self.sigma = sigma

    def fit(self, X, y):
        X = as_feature_matrix(X)
        y = np.asarray(y, dtype=np.int64)
        if y.shape != (X.shape[0],) or y.size == 0:
            raise ValueError("need one label per sample and at least one sample")
        if np.any(y < 0):
            raise ValueError("class ids must be >= 0")
        self.classes_ = np.unique(y)
        self.train_X_ = X.copy()
        self.train_y_ = y.copy()
        return self

    def _effective_sigma(self, sigma):
        s = self.sigma if sigma is None else sigma
        if s <= 0:
            raise ValueError(f"sigma must be > 0, got {s}")
        return float(s)

    def class_scores(self, X, sigma=None):
        """Per-class posterior-like scores, each row normalized to sum 1."""
        _check_fitted(self, "train_X_")
        s = self._effective_sigma(sigma)
        X = as_feature_matrix(X)
        if X.shape[1] != self.train_X_.shape[1]:
            raise ValueError(
                f"expected {self.train_X_.shape[1]} dims, got {X.shape[1]}"
            )
        d2 = ((X[:, None, :] - self.train_X_[None, :, :]) ** 2).sum(axis=2)
        d2 -= d2.min(axis=1, keepdims=True)  # common factor, argmax-safe
        kernels = np.exp(-d2 / (2.0 * s * s))
        scores = np.empty((X.shape[0], self.classes_.size))
        for c, label in enumerate(self.classes_):
            scores[:, c] = kernels[:, self.train_y_ == label].mean(axis=1)
        return scores / scores.sum(axis=1, keepdims=True)

    def predict(self, X, sigma=None):
        scores = self.class_scores(X, sigma)
        return self.classes_[np.argmax(scores, axis=1)]


@dataclass
class EvalReport:
    accuracy: float
    labels: np.ndarray
    confusion: np.ndarray  # confusion[i][j] = count(true label i, predicted j)


def evaluate(predict_fn, X, y):
    """Accuracy and confusion matrix of predict_fn on a labeled set."""
    X = as_feature_matrix(X)
    y = np.asarray(y, dtype=np.int64)
    if y.size == 0:
        raise ValueError("cannot evaluate on an empty dataset")
    if y.shape != (X.shape[0],):
        raise ValueError("need one label per sample")
    pred = np.asarray(predict_fn(X), dtype=np.int64)
    labels = np.unique(np.concatenate([y, pred]))
    index = {label: i for i, label in enumerate(labels)}
    confusion = np.zeros((labels.size, labels.size), dtype=np.int64)
    for truth, guess in zip(y, pred):
        confusion[index[truth], index[guess]] += 1
    accuracy = float(np.trace(confusion) / y.size)
    return EvalReport(accuracy=accuracy, labels=labels, confusion=confusion)
