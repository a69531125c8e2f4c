"""Versioned text persistence for trained models ("WCSMODEL v1").

One record per line, floats at 17 significant digits, which round-trips
float64 exactly: loading a saved model reproduces its predictions
bit-for-bit.
"""

import numpy as np

from .classifiers import LinearSVM, PNNClassifier, SelfOrganizingMap

MAGIC = "WCSMODEL v1"


def _fmt(value):
    return format(float(value), ".17g")


def _fmt_vec(vec):
    return " ".join(_fmt(v) for v in vec)


def _parse_vec(text):
    return np.array([float(tok) for tok in text.split()], dtype=np.float64)


def save_model(model):
    """Serialize a fitted model to the versioned text format."""
    lines = [MAGIC]
    if isinstance(model, LinearSVM):
        lines.append("kind svm")
        lines.append(f"dim {model.weights_.size}")
        lines.append(f"lambda {_fmt(model.lam)}")
        if getattr(model, "label_map_", None) is not None:
            lines.append("classes " + " ".join(str(int(c)) for c in model.label_map_))
        lines.append(f"bias {_fmt(model.bias_)}")
        lines.append("weights " + _fmt_vec(model.weights_))
    elif isinstance(model, SelfOrganizingMap):
        lines.append("kind som")
        lines.append(f"grid {model.width} {model.height}")
        lines.append(f"dim {model.weights_.shape[1]}")
        if getattr(model, "unit_labels_", None) is not None:
            lines.append("labels " + " ".join(str(int(v)) for v in model.unit_labels_))
        for row in model.weights_:
            lines.append("unit " + _fmt_vec(row))
    elif isinstance(model, PNNClassifier):
        lines.append("kind pnn")
        lines.append(f"dim {model.train_X_.shape[1]}")
        lines.append(f"classes {model.classes_.size}")
        for label in model.classes_:
            members = model.train_X_[model.train_y_ == label]
            lines.append(f"class {int(label)} {members.shape[0]}")
            for row in members:
                lines.append("vec " + _fmt_vec(row))
    else:
        raise TypeError(f"cannot serialize model of type {type(model).__name__}")
    return "\n".join(lines) + "\n"


class _Reader:
    def __init__(self, text):
        self.lines = [ln for ln in text.splitlines() if ln.strip()]
        self.pos = 0

    def next(self, expected_key=None):
        if self.pos >= len(self.lines):
            raise ValueError("model file ended unexpectedly")
        line = self.lines[self.pos]
        self.pos += 1
        if expected_key is not None:
            key, _, rest = line.partition(" ")
            if key != expected_key:
                raise ValueError(f"expected '{expected_key}' record, got {line!r}")
            return rest
        return line


def load_model(text):
    """Inverse of :func:`save_model`; returns a fitted estimator."""
    r = _Reader(text)
    if r.next() != MAGIC:
        raise ValueError(f"not a {MAGIC} file")
    kind = r.next("kind")
    if kind == "svm":
        dim = int(r.next("dim"))
        lam = float(r.next("lambda"))
        label_map = None
        nxt = r.next()
        if nxt.startswith("classes "):
            label_map = [int(tok) for tok in nxt.split()[1:]]
            nxt = r.next()
        key, _, rest = nxt.partition(" ")
        if key != "bias":
            raise ValueError(f"expected 'bias' record, got {nxt!r}")
        bias = float(rest)
        weights = _parse_vec(r.next("weights"))
        if weights.size != dim:
            raise ValueError(f"weight record has {weights.size} values, expected {dim}")
        model = LinearSVM(lam=lam)
        model.weights_ = weights
        model.bias_ = bias
        model.label_map_ = label_map
        return model
    if kind == "som":
        width, height = (int(tok) for tok in r.next("grid").split())
        dim = int(r.next("dim"))
        unit_labels = None
        nxt = r.next()
        if nxt.startswith("labels "):
            unit_labels = np.array([int(tok) for tok in nxt.split()[1:]], dtype=np.int64)
            nxt = r.next()
        rows = []
        while True:
            key, _, rest = nxt.partition(" ")
            if key != "unit":
                raise ValueError(f"expected 'unit' record, got {nxt!r}")
            rows.append(_parse_vec(rest))
            if len(rows) == width * height:
                break
            nxt = r.next()
        weights = np.stack(rows)
        if weights.shape[1] != dim:
            raise ValueError(f"unit records have {weights.shape[1]} dims, expected {dim}")
        model = SelfOrganizingMap(width=width, height=height)
        model.weights_ = weights
        model.grid_coords_ = np.stack(
            [np.repeat(np.arange(height), width), np.tile(np.arange(width), height)],
            axis=1,
        ).astype(np.float64)
        if unit_labels is not None:
            if unit_labels.size != width * height:
                raise ValueError("labels record length does not match grid size")
            model.unit_labels_ = unit_labels
        return model
    if kind == "pnn":
        dim = int(r.next("dim"))
        n_classes = int(r.next("classes"))
        X, y = [], []
        for _ in range(n_classes):
            fields = r.next("class").split()
            label, count = int(fields[0]), int(fields[1])
            for _ in range(count):
                vec = _parse_vec(r.next("vec"))
                if vec.size != dim:
                    raise ValueError(f"vec record has {vec.size} values, expected {dim}")
                X.append(vec)
                y.append(label)
        return PNNClassifier().fit(np.stack(X), np.array(y))
    raise ValueError(f"unknown model kind {kind!r}")
