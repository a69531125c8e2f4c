"""Coefficient-threshold compression for 1D and 2D decompositions.

Keeps the ceil(keep_fraction * N) largest-magnitude coefficients (ties
broken by flat coefficient index, ascending) and zeroes the rest. The
report carries the PSNR of the reconstruction against the inverse of the
untouched decomposition; peak is max |original sample|. A bit-exact
reconstruction is reported as PSNR = +inf.
"""

import math
from dataclasses import dataclass

import numpy as np

from .dwt import (
    SubbandDecomposition1D,
    SubbandPyramid2D,
    waverec1d,
    waverec2d,
)


@dataclass
class CompressionReport:
    kept_count: int
    total_count: int
    psnr: float


def _psnr(original, reconstruction):
    err = original - reconstruction
    rmse = float(np.sqrt(np.mean(err**2)))
    if rmse == 0.0:
        return math.inf
    peak = float(np.max(np.abs(original)))
    if peak == 0.0:
        return -math.inf
    return 20.0 * math.log10(peak / rmse)


def compress_threshold(dec, keep_fraction, wavelet):
    """Zero all but the largest coefficients; returns (thresholded, report)."""
    if not 0.0 <= keep_fraction <= 1.0:
        raise ValueError(f"keep_fraction must be in [0, 1], got {keep_fraction}")
    if isinstance(dec, SubbandDecomposition1D):
        invert = waverec1d
    elif isinstance(dec, SubbandPyramid2D):
        invert = waverec2d
    else:
        raise TypeError(f"unsupported decomposition type {type(dec).__name__}")

    flat = dec.flatten()
    total = flat.size
    keep = math.ceil(keep_fraction * total)
    # stable sort on descending magnitude keeps the lowest flat index on ties
    order = np.argsort(-np.abs(flat), kind="stable")
    kept_flat = np.zeros_like(flat)
    kept_idx = order[:keep]
    kept_flat[kept_idx] = flat[kept_idx]
    thresholded = dec.with_flat(kept_flat)

    original = invert(dec, wavelet)
    reconstruction = invert(thresholded, wavelet)
    report = CompressionReport(
        kept_count=int(keep),
        total_count=int(total),
        psnr=_psnr(original, reconstruction),
    )
    return thresholded, report
