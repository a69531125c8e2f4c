"""Fixed-length feature vectors from subband pyramids or scattering paths.

Estimator-style pieces (`FeatureNormalizer`, `TileFeaturizer`) follow the
scikit-learn fit/transform protocol so the pipeline composes with the wider
ecosystem; the per-tile extraction itself is a pure function.
"""

from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .dwt import SubbandPyramid2D, wavedec2d
from .scattering import scatter2d
from .validation import as_feature_matrix, as_image
from .wavelets import get_wavelet

STAT_ORDER = ("energy", "mean_abs", "std")
SOURCES = ("dwt-stats", "scattering")
STD_FLOOR = 1e-12


@dataclass(frozen=True)
class FeatureSpec:
    """Schema of an extracted feature vector."""

    source: str = "dwt-stats"
    levels: int = 3
    stats: tuple = STAT_ORDER
    normalization: str = "none"

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"source must be one of {SOURCES}, got {self.source!r}")
        if self.levels < 1:
            raise ValueError(f"levels must be >= 1, got {self.levels}")
        bad = [s for s in self.stats if s not in STAT_ORDER]
        if bad or not self.stats:
            raise ValueError(f"stats must be a non-empty subset of {STAT_ORDER}, got {self.stats}")
        # canonical stat order regardless of how the subset was given
        object.__setattr__(
            self, "stats", tuple(s for s in STAT_ORDER if s in self.stats)
        )
        if self.normalization not in ("none", "zscore"):
            raise ValueError(f"normalization must be 'none' or 'zscore', got {self.normalization!r}")

    @property
    def schema_id(self):
        return (
            f"{self.source}:J={self.levels}:"
            + ",".join(self.stats)
            + f":{self.normalization}"
        )

    def band_labels(self):
        labels = []
        for j in range(1, self.levels + 1):
            labels += [f"L{j}_lh", f"L{j}_hl", f"L{j}_hh"]
        labels.append(f"L{self.levels}_ll")
        return labels

    def feature_names(self):
        if self.source != "dwt-stats":
            raise ValueError("feature_names from the spec only covers dwt-stats")
        return [f"{band}_{stat}" for band in self.band_labels() for stat in self.stats]


def _band_stats(band, stats):
    flat = np.asarray(band, dtype=np.float64).ravel()
    out = []
    for stat in stats:
        if stat == "energy":
            out.append(np.mean(flat**2))
        elif stat == "mean_abs":
            out.append(np.mean(np.abs(flat)))
        else:
            out.append(np.std(flat))  # population std
    return out


def extract_dwt_stats(pyr: SubbandPyramid2D, spec: FeatureSpec):
    """Subband statistics in fixed band order: per-level (lh, hl, hh), then ll."""
    if spec.source != "dwt-stats":
        raise ValueError(f"spec.source must be 'dwt-stats', got {spec.source!r}")
    if spec.levels != pyr.levels:
        raise ValueError(
            f"spec levels {spec.levels} do not match pyramid levels {pyr.levels}"
        )
    values = []
    for triple in pyr.bands:
        for band in triple:
            values.extend(_band_stats(band, spec.stats))
    values.extend(_band_stats(pyr.ll, spec.stats))
    return np.array(values)


def tile_image(image, tile):
    """Row-major lossless partition into tile x tile pieces.

    Returns (tiles, coords) where coords are (tile_row, tile_col) grid
    positions. The tile size must divide both dimensions; pad first if not.
    """
    img = as_image(image)
    tile = int(tile)
    if tile < 2 or tile % 2 != 0:
        raise ValueError(f"tile size must be a positive even integer, got {tile}")
    rows, cols = img.shape
    if rows % tile != 0 or cols % tile != 0:
        raise ValueError(
            f"tile size {tile} must divide image dims {rows}x{cols}; pad the image first"
        )
    tiles, coords = [], []
    for r in range(rows // tile):
        for c in range(cols // tile):
            tiles.append(img[r * tile: (r + 1) * tile, c * tile: (c + 1) * tile].copy())
            coords.append((r, c))
    return tiles, coords


class FeatureNormalizer(BaseEstimator, TransformerMixin):
    """Per-dimension z-scoring learned from a training set.

    Constant dimensions normalize to exactly zero; otherwise the standard
    deviation is floored at 1e-12 before dividing.
    """

    def fit(self, X, y=None):
        X = as_feature_matrix(X)
        if X.shape[0] < 2:
            raise ValueError(f"need at least 2 vectors to fit, got {X.shape[0]}")
        constant = np.all(X == X[0], axis=0)
        self.mean_ = np.where(constant, X[0], X.mean(axis=0))
        self.std_ = np.where(constant, 0.0, X.std(axis=0))
        self.scale_ = np.maximum(self.std_, STD_FLOOR)
        self.dim_ = X.shape[1]
        return self

    def transform(self, X):
        if not hasattr(self, "mean_"):
            raise NotFittedError("FeatureNormalizer is not fitted yet")
        X = as_feature_matrix(X)
        if X.shape[1] != self.dim_:
            raise ValueError(f"expected {self.dim_} dims, got {X.shape[1]}")
        return (X - self.mean_) / self.scale_


class TileFeaturizer(BaseEstimator, TransformerMixin):
    """Tiles-in, feature-matrix-out transformer.

    `source` selects subband statistics or scattering paths; `normalize`
    learns a z-score on the fit set and applies it at transform time.
    """

    def __init__(self, source="dwt-stats", wavelet="haar", levels=3,
                 stats=STAT_ORDER, normalize=False, max_order=2):
        self.source = source
        self.wavelet = wavelet
        self.levels = levels
        self.stats = stats
        self.normalize = normalize
        self.max_order = max_order

    def _spec(self):
        return FeatureSpec(
            source=self.source,
            levels=self.levels,
            stats=tuple(self.stats),
            normalization="zscore" if self.normalize else "none",
        )

    def _raw_matrix(self, tiles):
        spec = self._spec()
        w = get_wavelet(self.wavelet)
        rows = []
        for tile in tiles:
            if spec.source == "dwt-stats":
                rows.append(extract_dwt_stats(wavedec2d(tile, w, spec.levels), spec))
            else:
                rows.append(
                    scatter2d(tile, spec.levels, wavelet=w, max_order=self.max_order).values
                )
        return np.array(rows)

    def feature_names(self):
        spec = self._spec()
        if spec.source == "dwt-stats":
            return spec.feature_names()
        probe_side = 1 << (self.levels + (1 if self.max_order == 2 else 0))
        probe = scatter2d(
            np.zeros((probe_side, probe_side)), self.levels,
            wavelet=get_wavelet(self.wavelet), max_order=self.max_order,
        )
        return probe.path_names()

    def fit(self, tiles, y=None):
        if self.normalize:
            self.normalizer_ = FeatureNormalizer().fit(self._raw_matrix(tiles))
        else:
            self.normalizer_ = None
        self.fitted_ = True
        return self

    def transform(self, tiles):
        if not hasattr(self, "fitted_"):
            raise NotFittedError("TileFeaturizer is not fitted yet")
        X = self._raw_matrix(tiles)
        if self.normalizer_ is not None:
            X = self.normalizer_.transform(X)
        return X
