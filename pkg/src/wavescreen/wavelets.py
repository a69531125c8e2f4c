"""Orthogonal wavelet filter families (Haar and Daubechies).

A wavelet here is a quadruple of real FIR filters of common even length L:
analysis low/high pass and synthesis low/high pass. The analysis pair is an
orthonormal quadrature-mirror pair,

    high[n] = (-1)^n * low[L - 1 - n],

and the synthesis filters are the time-reverses of the analysis filters,
which is the exact-inverse pairing for orthogonal filter banks. Every
constructor validates the filters against these identities before returning,
so the coefficients are self-verifying regardless of how they were obtained.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
import re

import numpy as np

FILTER_TOL = 1e-12

MIN_DB_ORDER = 2
MAX_DB_ORDER = 10


@dataclass(frozen=True, eq=False)
class Wavelet:
    """Named orthogonal filter quadruple."""

    name: str
    analysis_low: np.ndarray
    analysis_high: np.ndarray
    synthesis_low: np.ndarray
    synthesis_high: np.ndarray
    vanishing_moments: int

    @property
    def length(self):
        return self.analysis_low.size

    def __repr__(self):
        return f"Wavelet({self.name!r}, length={self.length})"


def validate_filters(w):
    """Check the Wavelet invariants; raise ValueError naming the violation."""
    h0 = np.asarray(w.analysis_low, dtype=np.float64)
    h1 = np.asarray(w.analysis_high, dtype=np.float64)
    g0 = np.asarray(w.synthesis_low, dtype=np.float64)
    g1 = np.asarray(w.synthesis_high, dtype=np.float64)
    L = h0.size
    if L % 2 != 0 or L < 2:
        raise ValueError(f"{w.name}: filter length must be even and >= 2, got {L}")
    if not (h1.size == g0.size == g1.size == L):
        raise ValueError(f"{w.name}: all four filters must share length {L}")
    if w.vanishing_moments < 1:
        raise ValueError(f"{w.name}: vanishing_moments must be positive")
    if abs(h0.sum() - np.sqrt(2.0)) > FILTER_TOL:
        raise ValueError(f"{w.name}: sum(analysis_low) != sqrt(2)")
    if abs(h1.sum()) > FILTER_TOL:
        raise ValueError(f"{w.name}: sum(analysis_high) != 0")
    for k in range(L // 2):
        ip = np.dot(h0[: L - 2 * k], h0[2 * k:])
        target = 1.0 if k == 0 else 0.0
        if abs(ip - target) > FILTER_TOL:
            raise ValueError(
                f"{w.name}: orthonormality violated at shift {2 * k} (got {ip})"
            )
    signs = (-1.0) ** np.arange(L)
    if np.max(np.abs(h1 - signs * h0[::-1])) > FILTER_TOL:
        raise ValueError(f"{w.name}: quadrature-mirror relation violated")
    if np.max(np.abs(g0 - h0[::-1])) > FILTER_TOL or np.max(np.abs(g1 - h1[::-1])) > FILTER_TOL:
        raise ValueError(f"{w.name}: synthesis filters are not analysis time-reverses")
    return w


def _from_lowpass(name, h0, vanishing_moments):
    h0 = np.asarray(h0, dtype=np.float64)
    signs = (-1.0) ** np.arange(h0.size)
    h1 = signs * h0[::-1]
    w = Wavelet(
        name=name,
        analysis_low=h0,
        analysis_high=h1,
        synthesis_low=h0[::-1].copy(),
        synthesis_high=h1[::-1].copy(),
        vanishing_moments=vanishing_moments,
    )
    return validate_filters(w)


def haar():
    """The 2-tap orthonormal filter pair."""
    r = np.sqrt(0.5)
    return _from_lowpass("haar", [r, r], vanishing_moments=1)


def _newton_refine(h, p, max_iter=60):
    # Square 2p x 2p system: p orthonormality residuals at even shifts plus
    # p alternating-sign moment conditions on scaled nodes n/(L-1).
    L = 2 * p
    n = np.arange(L, dtype=np.float64)
    t = n / (L - 1)
    signs = (-1.0) ** np.arange(L)
    best = h
    best_res = np.inf
    for _ in range(max_iter):
        F = np.empty(2 * p)
        J = np.zeros((2 * p, L))
        for k in range(p):
            s = 2 * k
            F[k] = np.dot(h[: L - s], h[s:]) - (1.0 if k == 0 else 0.0)
            row = np.zeros(L)
            row[: L - s] += h[s:]
            row[s:] += h[: L - s]
            J[k] = row
        for m in range(p):
            basis = signs * t**m
            F[p + m] = np.dot(basis, h)
            J[p + m] = basis
        res = np.max(np.abs(F))
        if res < best_res:
            best, best_res = h.copy(), res
        if res < 1e-15:
            break
        h = h - np.linalg.solve(J, F)
    return best


@lru_cache(maxsize=None)
def _daubechies_lowpass(p):
    # Spectral factorization: roots of the binomial autocorrelation
    # polynomial P(y) = sum_k C(p-1+k, k) y^k mapped to the z-plane via
    # y = (2 - z - 1/z)/4, keeping the root of each pair inside the unit
    # circle, times the (1+z)^p regularity factor. Newton refinement then
    # drives the orthonormality and moment residuals to machine precision.
    poly = [float(comb(p - 1 + k, k)) for k in range(p)]
    yroots = np.roots(poly[::-1]) if p > 1 else np.array([])
    h = np.array([1.0 + 0.0j])
    for _ in range(p):
        h = np.convolve(h, [1.0, 1.0])
    for y in yroots:
        b = 2.0 - 4.0 * y
        z = (b + np.sqrt(b * b - 4.0 + 0.0j)) / 2.0
        if abs(z) > 1.0:
            z = 1.0 / z
        h = np.convolve(h, [1.0, -z])
    h = np.real(h)
    h *= np.sqrt(2.0) / h.sum()
    h = _newton_refine(h, p)
    if abs(h[0]) < abs(h[-1]):
        h = h[::-1]
    return h


def daubechies(vanishing_moments):
    """Daubechies filter with the given number of vanishing moments (2..10).

    The returned low pass has 2*vanishing_moments taps; its quadrature-mirror
    high pass annihilates sampled polynomials up to degree
    vanishing_moments - 1. Order 1 is Haar and lives under haar().
    """
    p = int(vanishing_moments)
    if p < MIN_DB_ORDER or p > MAX_DB_ORDER:
        raise ValueError(
            f"daubechies order must be in {MIN_DB_ORDER}..{MAX_DB_ORDER}, got {p}"
            + ("; use haar() for order 1" if p == 1 else "")
        )
    return _from_lowpass(f"db{p}", _daubechies_lowpass(p), vanishing_moments=p)


def get_wavelet(name):
    """Look up a wavelet by name: 'haar' or 'db2'..'db10'."""
    key = str(name).strip().lower()
    if key == "haar" or key == "db1":
        return haar()
    m = re.fullmatch(r"db(\d+)", key)
    if m:
        return daubechies(int(m.group(1)))
    raise ValueError(f"unknown wavelet {name!r}; expected 'haar' or 'db2'..'db10'")
