"""Translation-stable scattering features from modulus-and-average cascades.

The cascade reuses the package's own orthogonal DWT as its filter bank and
averages with a plain mean over each band, which makes the features exactly
invariant to circular shifts by 2^levels. Path ordering is deterministic:
order ascending, then lexicographic level indices (and band letters in 2D).

Feature counts:
- 1D: 1 + J + J*(J-1)/2 for max_order=2 (second order keeps only the
  frequency-decreasing paths j2 > j1).
- 2D: 1 + 3J + 9J for max_order=2 (each first-order band is re-decomposed
  one Haar level, contributing its three detail means).
"""

from dataclasses import dataclass

import numpy as np

from .dwt import dwt2d, wavedec1d, wavedec2d
from .validation import as_image, as_signal, check_levels
from .wavelets import Wavelet, haar

BAND_NAMES = ("lh", "hl", "hh")


@dataclass
class ScatteringFeature:
    """Ordered path labels plus the value vector aligned with them."""

    paths: list
    values: np.ndarray

    def path_names(self):
        names = []
        for p in self.paths:
            if p[0] == 0:
                names.append("o0")
            else:
                names.append(f"o{p[0]}_" + "_".join(str(t) for t in p[1:]))
        return names


def _check_order(max_order):
    if max_order not in (0, 1, 2):
        raise ValueError(f"max_order must be 0, 1 or 2, got {max_order}")


def scatter1d(signal, levels, wavelet: Wavelet | None = None, max_order=2):
    """Scattering feature vector of a 1D signal.

    Order 0 is the signal mean; order 1 is mean|detail_j| per level j; order
    2 re-decomposes each modulus sequence and reads the level-(j2-j1) detail.
    """
    _check_order(max_order)
    x = as_signal(signal)
    w = wavelet if wavelet is not None else haar()
    check_levels(x.size, levels)

    paths = [(0,)]
    values = [float(np.mean(x))]
    if max_order >= 1:
        dec = wavedec1d(x, w, levels)
        moduli = [np.abs(d) for d in dec.details]
        for j in range(1, levels + 1):
            paths.append((1, j))
            values.append(float(np.mean(moduli[j - 1])))
        if max_order == 2:
            for j1 in range(1, levels):
                sub = wavedec1d(moduli[j1 - 1], w, levels - j1)
                for j2 in range(j1 + 1, levels + 1):
                    paths.append((2, j1, j2))
                    values.append(float(np.mean(np.abs(sub.details[j2 - j1 - 1]))))
    return ScatteringFeature(paths=paths, values=np.array(values))


def scatter2d(image, levels, wavelet: Wavelet | None = None, max_order=2):
    """Scattering feature vector of a 2D tile.

    Order 1 covers the 3*levels detail bands of the pyramid; order 2
    re-decomposes each band modulus one Haar level. With max_order=2 the
    tile dimensions must be divisible by 2^(levels+1) so that every band
    admits the extra level.
    """
    _check_order(max_order)
    img = as_image(image)
    w = wavelet if wavelet is not None else haar()
    check_levels(img.shape[0], levels, what="rows")
    check_levels(img.shape[1], levels, what="cols")
    if max_order == 2:
        check_levels(img.shape[0], levels + 1, what="rows (order-2 scattering)")
        check_levels(img.shape[1], levels + 1, what="cols (order-2 scattering)")

    paths = [(0,)]
    values = [float(np.mean(img))]
    if max_order >= 1:
        pyr = wavedec2d(img, w, levels)
        first_order = []
        for j in range(1, levels + 1):
            for name, band in zip(BAND_NAMES, pyr.bands[j - 1]):
                first_order.append((j, name, band))
                paths.append((1, j, name))
                values.append(float(np.mean(np.abs(band))))
        if max_order == 2:
            for j, name, band in first_order:
                _, s_lh, s_hl, s_hh = dwt2d(np.abs(band), haar())
                for sub_name, sub in zip(BAND_NAMES, (s_lh, s_hl, s_hh)):
                    paths.append((2, j, name, sub_name))
                    values.append(float(np.mean(np.abs(sub))))
    return ScatteringFeature(paths=paths, values=np.array(values))
