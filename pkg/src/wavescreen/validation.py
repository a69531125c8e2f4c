"""Shared input checks. All public entry points validate through these."""

import numpy as np


def as_float_array(x, name="array"):
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite (no NaN/Inf)")
    return arr


def as_signal(x, name="signal"):
    arr = as_float_array(x, name)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if arr.size < 2:
        raise ValueError(f"{name} must have at least 2 samples, got {arr.size}")
    return arr


def as_image(x, name="image"):
    arr = as_float_array(x, name)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must be non-empty")
    return arr


def as_feature_map(x, name="feature map"):
    arr = as_float_array(x, name)
    if arr.ndim != 3:
        raise ValueError(
            f"{name} must be 3-dimensional (channels, height, width), got shape {arr.shape}"
        )
    return arr


def as_feature_matrix(x, name="features"):
    arr = as_float_array(x, name)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional (samples, dims), got shape {arr.shape}")
    return arr


def check_even(n, what="length"):
    if n % 2 != 0:
        raise ValueError(f"{what} must be even, got {n}; pad the input first")


def max_levels(n):
    """Largest J such that 2**J divides n."""
    n = int(n)
    if n <= 0:
        return 0
    return (n & -n).bit_length() - 1


def check_levels(n, levels, what="length"):
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    if n % (1 << levels) != 0:
        raise ValueError(
            f"{what} {n} is not divisible by 2^{levels}; "
            f"maximum feasible levels is {max_levels(n)}"
        )
