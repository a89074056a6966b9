"""CPU rasterizer: analytic ray casting of cylinder worlds at 64x64.

Projection convention (load-bearing for every image-space assertion in the
package): the pixel column axis is the robot's LEFT vector, so turning the
robot counterclockwise shifts scene content toward LOWER column indices.
Rows run top (sky) to bottom (near floor).
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import OutsideArenaError
from . import palette
from .geometry import Pose
from .world import SceneObject, WorldConfig

CHECKER_SIZE = 0.5
HORIZON_BAND_SLOPE = 0.08
FOG_START = 6.0
FOG_FULL = 12.0
_EPS = 1e-9


def _ray_grid(image_size: int, fov: float) -> tuple[np.ndarray, np.ndarray]:
    """Per-pixel (u, v) tangent coordinates; u along LEFT, v along UP."""
    f_px = (image_size / 2.0) / math.tan(fov / 2.0)
    center = (image_size - 1) / 2.0
    cols = np.arange(image_size, dtype=np.float64)
    rows = np.arange(image_size, dtype=np.float64)
    u = (cols - center) / f_px  # (W,)
    v = (center - rows) / f_px  # (H,)
    return np.meshgrid(u, v)  # each (H, W), row-major


def _cylinder_hits(
    obj: SceneObject,
    height: float,
    ox: float,
    oy: float,
    oz: float,
    dx: np.ndarray,
    dy: np.ndarray,
    dz: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Nearest ray parameter t and shaded color for one vertical cylinder."""
    cx, cy = obj.position
    rx, ry = ox - cx, oy - cy
    a = dx * dx + dy * dy  # >= 1 by construction of the ray grid
    b = 2.0 * (rx * dx + ry * dy)
    c0 = rx * rx + ry * ry - obj.radius**2
    disc = b * b - 4.0 * a * c0
    hit = disc > 0.0
    sqrt_disc = np.sqrt(np.where(hit, disc, 0.0))
    t = (-b - sqrt_disc) / (2.0 * a)
    z_hit = oz + t * dz
    hit &= (t > _EPS) & (z_hit >= 0.0) & (z_hit <= height)

    # Curvature cue: brighten the part of the surface facing the camera.
    nx = (ox + t * dx - cx) / obj.radius
    ny = (oy + t * dy - cy) / obj.radius
    d_norm = np.sqrt(a)
    facing = np.clip(-(nx * dx + ny * dy) / d_norm, 0.0, 1.0)
    shade = 0.7 + 0.3 * facing
    color = palette.rgb(obj.color_id)[None, None, :] * shade[..., None]
    return np.where(hit, t, np.inf), color


def render(world: WorldConfig, pose: Pose) -> np.ndarray:
    """Render the first-person view at ``pose``.

    Returns an (image_size, image_size, 3) float32 array with channel values
    in [-1, 1]. Pure function of (world, pose); raises
    :class:`OutsideArenaError` for poses outside the arena.
    """
    if not world.contains_pose(pose):
        raise OutsideArenaError(f"pose outside arena: {pose}")

    cam = world.camera
    u, v = _ray_grid(cam.image_size, cam.fov)
    sin_t, cos_t = math.sin(pose.theta), math.cos(pose.theta)
    # World-frame ray directions: forward + u * left + v * up.
    dx = cos_t - u * sin_t
    dy = sin_t + u * cos_t
    dz = v
    ox, oy, oz = pose.x, pose.y, cam.height

    img = np.empty((cam.image_size, cam.image_size, 3), dtype=np.float64)

    # Background: checkerboard floor below the horizon, banded sky above.
    below = dz < -_EPS
    t_floor = np.where(below, -oz / np.where(below, dz, -1.0), np.inf)
    gx = ox + t_floor * dx
    gy = oy + t_floor * dy
    with np.errstate(invalid="ignore"):
        parity = (np.floor(gx / CHECKER_SIZE) + np.floor(gy / CHECKER_SIZE)) % 2.0
    light = palette.rgb(palette.FLOOR_LIGHT)
    dark = palette.rgb(palette.FLOOR_DARK)
    checker = np.where(parity[..., None] == 0.0, light, dark)
    # Fade distant floor toward the mean tone so sub-pixel checkers stay calm.
    ground_dist = t_floor * np.sqrt(dx * dx + dy * dy)
    fog = np.clip((ground_dist - FOG_START) / (FOG_FULL - FOG_START), 0.0, 1.0)
    mid = (light + dark) / 2.0
    floor_color = checker * (1.0 - fog[..., None]) + mid * fog[..., None]

    elevation = dz / np.sqrt(dx * dx + dy * dy)
    band = (elevation >= -_EPS) & (elevation < HORIZON_BAND_SLOPE)
    sky_color = np.where(
        band[..., None], palette.rgb(palette.HORIZON_BAND), palette.rgb(palette.SKY)
    )
    img[:] = np.where(below[..., None], floor_color, sky_color)
    depth = t_floor

    objects: list[tuple[SceneObject, float]] = [
        (world.target, palette.CYLINDER_HEIGHT["target"])
    ]
    objects += [(o, palette.CYLINDER_HEIGHT["obstacle"]) for o in world.obstacles]
    objects += [(o, palette.CYLINDER_HEIGHT["distractor"]) for o in world.distractors]
    for obj, height in objects:
        t, color = _cylinder_hits(obj, height, ox, oy, oz, dx, dy, dz)
        closer = t < depth
        img = np.where(closer[..., None], color, img)
        depth = np.where(closer, t, depth)

    return np.clip(img * 2.0 - 1.0, -1.0, 1.0).astype(np.float32)


def silhouette_centroid_col(image: np.ndarray, color_id: int) -> float | None:
    """Mean column index of pixels classified as ``color_id``, or None if absent."""
    mask = palette.classify_pixels(image) == color_id
    if not mask.any():
        return None
    return float(np.nonzero(mask)[1].mean())
