"""Downsampling for multi-channel feature maps: destructive average/max
pooling baselines and the invertible DWT alternative.

Feature maps are channel-major (channels, height, width). dwt_pool turns
each input channel into four output channels at consecutive indices in
(ll, lh, hl, hh) order, halving both spatial dims; the element count is
preserved and dwt_unpool inverts exactly.
"""

from dataclasses import dataclass

import numpy as np

from .dwt import _analyze_axis, _synthesize_axis
from .validation import as_feature_map, check_even
from .wavelets import Wavelet


def _check_spatial(fmap):
    check_even(fmap.shape[1], "height")
    check_even(fmap.shape[2], "width")


def avg_pool2(fmap):
    """Mean over non-overlapping 2x2 regions."""
    x = as_feature_map(fmap)
    _check_spatial(x)
    c, h, w = x.shape
    return x.reshape(c, h // 2, 2, w // 2, 2).mean(axis=(2, 4))


def max_pool2(fmap):
    """Max over non-overlapping 2x2 regions."""
    x = as_feature_map(fmap)
    _check_spatial(x)
    c, h, w = x.shape
    return x.reshape(c, h // 2, 2, w // 2, 2).max(axis=(2, 4))


def dwt_pool(fmap, wavelet: Wavelet):
    """One 2D DWT level per channel; subbands become channels."""
    x = as_feature_map(fmap)
    _check_spatial(x)
    c, h, w = x.shape
    lo, hi = _analyze_axis(x, wavelet, axis=1)
    ll, lh = _analyze_axis(lo, wavelet, axis=2)
    hl, hh = _analyze_axis(hi, wavelet, axis=2)
    out = np.empty((4 * c, h // 2, w // 2))
    out[0::4] = ll
    out[1::4] = lh
    out[2::4] = hl
    out[3::4] = hh
    return out


def dwt_unpool(fmap, wavelet: Wavelet):
    """Exact inverse of :func:`dwt_pool`."""
    x = as_feature_map(fmap)
    if x.shape[0] % 4 != 0:
        raise ValueError(
            f"channel count must be divisible by 4 to unpool, got {x.shape[0]}"
        )
    ll, lh, hl, hh = x[0::4], x[1::4], x[2::4], x[3::4]
    lo = _synthesize_axis(ll, lh, wavelet, axis=2)
    hi = _synthesize_axis(hl, hh, wavelet, axis=2)
    return _synthesize_axis(lo, hi, wavelet, axis=1)


def _replicate2(fmap):
    return np.repeat(np.repeat(fmap, 2, axis=1), 2, axis=2)


@dataclass
class PoolReport:
    method: str
    channels: int
    height: int
    width: int
    reconstruction_rmse: float


def info_loss_report(fmap, wavelet: Wavelet):
    """Pool with each method, reconstruct best-effort, report RMSE.

    avg/max reconstruct by replicating each pooled value into its 2x2
    block (nearest-neighbor upsampling); dwt reconstructs exactly via
    dwt_unpool.
    """
    x = as_feature_map(fmap)
    _check_spatial(x)
    reports = []
    for method in ("avg", "max", "dwt"):
        if method == "avg":
            pooled = avg_pool2(x)
            recon = _replicate2(pooled)
        elif method == "max":
            pooled = max_pool2(x)
            recon = _replicate2(pooled)
        else:
            pooled = dwt_pool(x, wavelet)
            recon = dwt_unpool(pooled, wavelet)
        rmse = float(np.sqrt(np.mean((recon - x) ** 2)))
        reports.append(
            PoolReport(
                method=method,
                channels=pooled.shape[0],
                height=pooled.shape[1],
                width=pooled.shape[2],
                reconstruction_rmse=rmse,
            )
        )
    return reports
