"""Multi-level discrete wavelet transforms with periodic boundary handling.

Conventions fixed repo-wide:

- Analysis is circular correlation followed by decimation by two:
  ``approx[k] = sum_n low[n] * x[(2k + n) % N]`` and likewise for the detail
  with the high pass. For Haar this makes the detail ``(x_even - x_odd)/sqrt(2)``.
- The transform matrix is orthogonal, so the inverse is its adjoint; round
  trips are exact to floating-point precision and energy is conserved.
- Inputs must have even length (2^levels-divisible for multi-level). No
  silent padding: ``pad_signal`` / ``pad_image`` are provided for callers
  that need it.
- 2D transforms run the 1D pass along axis 0 (columns) first, then along
  axis 1 (rows). Band letters name the (axis-0, axis-1) filters, so ``lh``
  is column-lowpass / row-highpass.
- Detail bands are stored finest to coarsest: ``details[0]`` / ``bands[0]``
  belong to level 1. Flattened coefficient order is the coarsest
  approximation first, then details from coarsest to finest.
"""

from dataclasses import dataclass, field

import numpy as np

from .validation import as_signal, as_image, check_even, check_levels
from .wavelets import Wavelet


def _analyze_axis(arr, w, axis):
    n = arr.shape[axis]
    check_even(n, f"axis {axis} extent")
    take = [slice(None)] * arr.ndim
    take[axis] = slice(0, None, 2)
    take = tuple(take)
    lo = np.zeros_like(arr[take])
    hi = np.zeros_like(lo)
    for t in range(w.length):
        shifted = np.roll(arr, -t, axis=axis)[take]
        lo += w.analysis_low[t] * shifted
        hi += w.analysis_high[t] * shifted
    return lo, hi


def _synthesize_axis(lo, hi, w, axis):
    if lo.shape != hi.shape:
        raise ValueError(
            f"approximation and detail shapes differ: {lo.shape} vs {hi.shape}"
        )
    shape = list(lo.shape)
    shape[axis] *= 2
    put = [slice(None)] * lo.ndim
    put[axis] = slice(0, None, 2)
    put = tuple(put)
    up_lo = np.zeros(shape)
    up_hi = np.zeros(shape)
    up_lo[put] = lo
    up_hi[put] = hi
    out = np.zeros(shape)
    for t in range(w.length):
        out += w.analysis_low[t] * np.roll(up_lo, t, axis=axis)
        out += w.analysis_high[t] * np.roll(up_hi, t, axis=axis)
    return out


# ---------------------------------------------------------------- 1D


def dwt1d(signal, wavelet: Wavelet):
    """One analysis level: returns (approx, detail), each of length N/2."""
    x = as_signal(signal)
    return _analyze_axis(x, wavelet, axis=0)


def idwt1d(approx, detail, wavelet: Wavelet):
    """Exact inverse of :func:`dwt1d`."""
    a = np.asarray(approx, dtype=np.float64)
    d = np.asarray(detail, dtype=np.float64)
    if a.shape != d.shape:
        raise ValueError(f"approx and detail lengths differ: {a.size} vs {d.size}")
    return _synthesize_axis(a, d, wavelet, axis=0)


@dataclass
class SubbandDecomposition1D:
    """Multi-level 1D coefficient container.

    ``details[j-1]`` is the level-j detail (finest to coarsest); ``approx``
    is the level-J approximation. Total coefficient count equals the
    original length.
    """

    approx: np.ndarray
    details: list = field(default_factory=list)
    original_length: int = 0

    @property
    def levels(self):
        return len(self.details)

    @property
    def coefficient_count(self):
        return self.approx.size + sum(d.size for d in self.details)

    def flatten(self):
        """Coefficients as one vector: approx, then details coarsest->finest."""
        return np.concatenate([self.approx] + [d for d in reversed(self.details)])

    def with_flat(self, flat):
        """Rebuild a decomposition of the same shape from a flat vector."""
        flat = np.asarray(flat, dtype=np.float64)
        if flat.size != self.coefficient_count:
            raise ValueError(
                f"flat vector has {flat.size} coefficients, expected {self.coefficient_count}"
            )
        pos = self.approx.size
        approx = flat[:pos].copy()
        details = [None] * self.levels
        for j in range(self.levels, 0, -1):
            d = self.details[j - 1]
            details[j - 1] = flat[pos: pos + d.size].copy()
            pos += d.size
        return SubbandDecomposition1D(approx, details, self.original_length)


def wavedec1d(signal, wavelet: Wavelet, levels):
    """Cascade analysis: re-split the approximation branch `levels` times."""
    x = as_signal(signal)
    check_levels(x.size, levels)
    details = []
    approx = x
    for _ in range(levels):
        approx, detail = _analyze_axis(approx, wavelet, axis=0)
        details.append(detail)
    return SubbandDecomposition1D(approx, details, original_length=x.size)


def waverec1d(dec: SubbandDecomposition1D, wavelet: Wavelet):
    """Exact inverse of :func:`wavedec1d`."""
    approx = np.asarray(dec.approx, dtype=np.float64)
    for detail in reversed(dec.details):
        approx = _synthesize_axis(approx, np.asarray(detail, dtype=np.float64), wavelet, axis=0)
    return approx


# ---------------------------------------------------------------- 2D


def dwt2d(image, wavelet: Wavelet):
    """One 2D analysis level: returns quarter-size (ll, lh, hl, hh)."""
    img = as_image(image)
    lo, hi = _analyze_axis(img, wavelet, axis=0)
    ll, lh = _analyze_axis(lo, wavelet, axis=1)
    hl, hh = _analyze_axis(hi, wavelet, axis=1)
    return ll, lh, hl, hh


def idwt2d(ll, lh, hl, hh, wavelet: Wavelet):
    """Exact inverse of :func:`dwt2d`."""
    bands = [np.asarray(b, dtype=np.float64) for b in (ll, lh, hl, hh)]
    if len({b.shape for b in bands}) != 1:
        raise ValueError("all four subbands must share one shape")
    ll, lh, hl, hh = bands
    lo = _synthesize_axis(ll, lh, wavelet, axis=1)
    hi = _synthesize_axis(hl, hh, wavelet, axis=1)
    return _synthesize_axis(lo, hi, wavelet, axis=0)


@dataclass
class SubbandPyramid2D:
    """Multi-level 2D coefficient container.

    ``bands[j-1]`` is the (lh, hl, hh) triple at level j (finest to
    coarsest); ``ll`` is the level-J approximation grid.
    """

    ll: np.ndarray
    bands: list = field(default_factory=list)
    original_shape: tuple = (0, 0)

    @property
    def levels(self):
        return len(self.bands)

    @property
    def coefficient_count(self):
        return self.ll.size + sum(b.size for triple in self.bands for b in triple)

    def flatten(self):
        """ll first, then (lh, hl, hh) per level from coarsest to finest."""
        parts = [self.ll.ravel()]
        for triple in reversed(self.bands):
            parts.extend(b.ravel() for b in triple)
        return np.concatenate(parts)

    def with_flat(self, flat):
        flat = np.asarray(flat, dtype=np.float64)
        if flat.size != self.coefficient_count:
            raise ValueError(
                f"flat vector has {flat.size} coefficients, expected {self.coefficient_count}"
            )
        pos = self.ll.size
        ll = flat[:pos].reshape(self.ll.shape).copy()
        bands = [None] * self.levels
        for j in range(self.levels, 0, -1):
            triple = []
            for b in self.bands[j - 1]:
                triple.append(flat[pos: pos + b.size].reshape(b.shape).copy())
                pos += b.size
            bands[j - 1] = tuple(triple)
        return SubbandPyramid2D(ll, bands, self.original_shape)


def wavedec2d(image, wavelet: Wavelet, levels):
    """Cascade analysis recursing on the ll band only."""
    img = as_image(image)
    check_levels(img.shape[0], levels, what="rows")
    check_levels(img.shape[1], levels, what="cols")
    bands = []
    ll = img
    for _ in range(levels):
        ll, lh, hl, hh = dwt2d(ll, wavelet)
        bands.append((lh, hl, hh))
    return SubbandPyramid2D(ll, bands, original_shape=img.shape)


def waverec2d(pyr: SubbandPyramid2D, wavelet: Wavelet):
    """Exact inverse of :func:`wavedec2d`."""
    ll = np.asarray(pyr.ll, dtype=np.float64)
    for lh, hl, hh in reversed(pyr.bands):
        ll = idwt2d(ll, lh, hl, hh, wavelet)
    return ll


# ---------------------------------------------------------------- padding


def pad_signal(signal, levels):
    """Zero-pad at the end to the next multiple of 2^levels."""
    x = as_signal(signal)
    step = 1 << levels
    target = -(-x.size // step) * step
    return np.pad(x, (0, target - x.size))


def pad_image(image, levels):
    """Zero-pad rows and cols at the end to the next multiple of 2^levels."""
    img = as_image(image)
    step = 1 << levels
    tr = -(-img.shape[0] // step) * step
    tc = -(-img.shape[1] // step) * step
    return np.pad(img, ((0, tr - img.shape[0]), (0, tc - img.shape[1])))
