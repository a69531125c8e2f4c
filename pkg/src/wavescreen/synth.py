"""Seeded synthetic tile generator for the cloud-vs-ground task.

Class 0 ("ground") tiles are high-frequency: oriented sinusoidal stripes
plus uniform noise. Class 1 ("cloud") tiles are smooth sums of one to three
Gaussian blobs over a flat base level. Pixel values are quantized to
integers 0..255 so the in-memory tiles and their PGM round trips agree
bit-exactly. Output order is the full ground block then the full cloud
block; everything is a pure function of the config.
"""

from dataclasses import dataclass

import numpy as np

GROUND_LABEL = 0
CLOUD_LABEL = 1


@dataclass(frozen=True)
class SynthConfig:
    seed: int = 0
    tile_size: int = 32
    count_per_class: int = 100
    blob_sigma: float = 6.0
    noise_amp: float = 20.0

    def __post_init__(self):
        if self.tile_size < 2 or self.tile_size % 2 != 0:
            raise ValueError(f"tile_size must be even and >= 2, got {self.tile_size}")
        if self.count_per_class < 1:
            raise ValueError(f"count_per_class must be >= 1, got {self.count_per_class}")
        if self.blob_sigma <= 0:
            raise ValueError(f"blob_sigma must be > 0, got {self.blob_sigma}")
        if self.noise_amp < 0:
            raise ValueError(f"noise_amp must be >= 0, got {self.noise_amp}")


def _quantize(tile):
    return np.clip(np.rint(tile), 0, 255).astype(np.float64)


def _ground_tile(rng, size, noise_amp):
    yy, xx = np.mgrid[0:size, 0:size].astype(np.float64)
    theta = rng.uniform(0.0, np.pi)
    freq = rng.uniform(0.15, 0.45)
    phase = rng.uniform(0.0, 2.0 * np.pi)
    level = rng.uniform(80.0, 140.0)
    amp = rng.uniform(40.0, 90.0)
    stripes = np.sin(2.0 * np.pi * freq * (np.cos(theta) * xx + np.sin(theta) * yy) + phase)
    noise = rng.uniform(-1.0, 1.0, size=(size, size)) * noise_amp
    return _quantize(level + amp * stripes + noise)


def _cloud_tile(rng, size, blob_sigma):
    yy, xx = np.mgrid[0:size, 0:size].astype(np.float64)
    tile = np.full((size, size), rng.uniform(30.0, 70.0))
    for _ in range(int(rng.integers(1, 4))):
        cy, cx = rng.uniform(0.0, size, size=2)
        sigma = blob_sigma * rng.uniform(0.6, 1.4)
        amp = rng.uniform(100.0, 180.0)
        tile += amp * np.exp(-((xx - cx) ** 2 + (yy - cy) ** 2) / (2.0 * sigma**2))
    return _quantize(tile)


def synth_tiles(cfg: SynthConfig):
    """Generate a balanced labeled tile set: (tiles, labels)."""
    rng = np.random.default_rng(cfg.seed)
    tiles = []
    for _ in range(cfg.count_per_class):
        tiles.append(_ground_tile(rng, cfg.tile_size, cfg.noise_amp))
    for _ in range(cfg.count_per_class):
        tiles.append(_cloud_tile(rng, cfg.tile_size, cfg.blob_sigma))
    labels = np.array(
        [GROUND_LABEL] * cfg.count_per_class + [CLOUD_LABEL] * cfg.count_per_class,
        dtype=np.int64,
    )
    return tiles, labels
