"""Short-time Fourier baseline: windowed naive DFT magnitudes."""

from dataclasses import dataclass

import numpy as np

from .validation import as_signal

WINDOWS = ("rect", "hann")


@dataclass
class Spectrogram:
    window_len: int
    hop: int
    window: str
    magnitudes: np.ndarray  # (frames, window_len//2 + 1), non-negative

    @property
    def frames(self):
        return self.magnitudes.shape[0]

    @property
    def bins(self):
        return self.magnitudes.shape[1]


def stft_spectrogram(signal, window_len, hop, window="rect"):
    """Magnitude spectrogram via an explicit O(n^2) DFT per frame.

    Frames start at 0 and advance by `hop` while they fit entirely inside
    the signal. One-sided spectrum: window_len//2 + 1 bins.
    """
    x = as_signal(signal)
    window_len = int(window_len)
    hop = int(hop)
    if window_len < 2 or window_len % 2 != 0:
        raise ValueError(f"window_len must be even and >= 2, got {window_len}")
    if hop < 1:
        raise ValueError(f"hop must be >= 1, got {hop}")
    if window_len > x.size:
        raise ValueError(
            f"window_len {window_len} exceeds signal length {x.size}"
        )
    if window not in WINDOWS:
        raise ValueError(f"window must be one of {WINDOWS}, got {window!r}")

    n = np.arange(window_len)
    if window == "hann":
        taper = 0.5 * (1.0 - np.cos(2.0 * np.pi * n / window_len))
    else:
        taper = np.ones(window_len)

    bins = window_len // 2 + 1
    basis = np.exp(-2j * np.pi * np.outer(np.arange(bins), n) / window_len)
    starts = range(0, x.size - window_len + 1, hop)
    mags = np.empty((len(starts), bins))
    for i, s in enumerate(starts):
        mags[i] = np.abs(basis @ (taper * x[s: s + window_len]))
    return Spectrogram(window_len=window_len, hop=hop, window=window, magnitudes=mags)
