"""Fixed color palette shared by the renderer and image-analysis helpers.

Each object class gets a distinct color id so target/obstacle/distractor
appearance is learnable from pixels alone. RGB values are in [0, 1]; the
renderer maps final images to [-1, 1].
"""

from __future__ import annotations

import numpy as np

FLOOR_LIGHT = 0
FLOOR_DARK = 1
SKY = 2
HORIZON_BAND = 3
TARGET = 4
OBSTACLE = 5
DISTRACTOR_GREEN = 6
DISTRACTOR_YELLOW = 7

PALETTE: dict[int, tuple[float, float, float]] = {
    FLOOR_LIGHT: (0.78, 0.78, 0.78),
    FLOOR_DARK: (0.55, 0.55, 0.55),
    SKY: (0.62, 0.80, 0.95),
    HORIZON_BAND: (0.42, 0.50, 0.58),
    TARGET: (0.90, 0.25, 0.10),
    OBSTACLE: (0.12, 0.25, 0.85),
    DISTRACTOR_GREEN: (0.15, 0.70, 0.25),
    DISTRACTOR_YELLOW: (0.92, 0.78, 0.12),
}

#: Cylinder height per object class, world units.
CYLINDER_HEIGHT: dict[str, float] = {"target": 0.7, "obstacle": 0.5, "distractor": 0.7}


def rgb(color_id: int) -> np.ndarray:
    try:
        return np.asarray(PALETTE[color_id], dtype=np.float64)
    except KeyError:
        raise KeyError(f"unknown color id {color_id}") from None


def classify_pixels(image: np.ndarray) -> np.ndarray:
    """Map an HxWx3 image in [-1, 1] to the nearest palette color id per pixel."""
    img01 = (np.asarray(image, dtype=np.float64) + 1.0) / 2.0
    ids = sorted(PALETTE)
    colors = np.stack([np.asarray(PALETTE[i]) for i in ids])  # (K, 3)
    d2 = ((img01[..., None, :] - colors) ** 2).sum(axis=-1)  # (H, W, K)
    return np.asarray(ids, dtype=np.int64)[np.argmin(d2, axis=-1)]
