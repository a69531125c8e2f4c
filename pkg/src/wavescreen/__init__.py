"""Wavelet transform toolkit with scattering features, invertible DWT
pooling, and lightweight classifiers for tile classification."""

from .wavelets import Wavelet, daubechies, get_wavelet, haar
from .dwt import (
    SubbandDecomposition1D,
    SubbandPyramid2D,
    dwt1d,
    dwt2d,
    idwt1d,
    idwt2d,
    pad_image,
    pad_signal,
    wavedec1d,
    wavedec2d,
    waverec1d,
    waverec2d,
)
from .stft import Spectrogram, stft_spectrogram
from .compress import CompressionReport, compress_threshold
from .scattering import ScatteringFeature, scatter1d, scatter2d
from .features import (
    FeatureNormalizer,
    FeatureSpec,
    TileFeaturizer,
    extract_dwt_stats,
    tile_image,
)
from .classifiers import (
    EvalReport,
    LinearSVM,
    PNNClassifier,
    SelfOrganizingMap,
    evaluate,
    majority_unit_labels,
)
from .pooling import (
    PoolReport,
    avg_pool2,
    dwt_pool,
    dwt_unpool,
    info_loss_report,
    max_pool2,
)
from .pgm import PgmError, read_pgm, write_pgm
from .synth import CLOUD_LABEL, GROUND_LABEL, SynthConfig, synth_tiles
from .model_io import load_model, save_model

__version__ = "0.1.0"

__all__ = [
    "Wavelet", "haar", "daubechies", "get_wavelet",
    "dwt1d", "idwt1d", "wavedec1d", "waverec1d",
    "dwt2d", "idwt2d", "wavedec2d", "waverec2d",
    "SubbandDecomposition1D", "SubbandPyramid2D",
    "pad_signal", "pad_image",
    "Spectrogram", "stft_spectrogram",
    "CompressionReport", "compress_threshold",
    "ScatteringFeature", "scatter1d", "scatter2d",
    "FeatureSpec", "FeatureNormalizer", "TileFeaturizer",
    "extract_dwt_stats", "tile_image",
    "LinearSVM", "SelfOrganizingMap", "PNNClassifier",
    "majority_unit_labels", "evaluate", "EvalReport",
    "avg_pool2", "max_pool2", "dwt_pool", "dwt_unpool",
    "info_loss_report", "PoolReport",
    "PgmError", "read_pgm", "write_pgm",
    "SynthConfig", "synth_tiles", "GROUND_LABEL", "CLOUD_LABEL",
    "save_model", "load_model",
]
