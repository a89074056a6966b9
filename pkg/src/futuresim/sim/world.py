"""World description: arena, objects, camera, and trial protocol constants."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from ..errors import ValidationError
from .geometry import Pose

#: Robot center entering an obstacle disc inflated by this margin is a collision.
COLLISION_INFLATION = 0.1


@dataclass(frozen=True)
class Arena:
    """Axis-aligned rectangle the robot must stay inside."""

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def __post_init__(self) -> None:
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValidationError(f"degenerate arena: {self}")

    def contains(self, x: float, y: float, margin: float = 0.0) -> bool:
        return (
            self.x_min + margin <= x <= self.x_max - margin
            and self.y_min + margin <= y <= self.y_max - margin
        )


@dataclass(frozen=True)
class SceneObject:
    """A colored cylinder standing on the floor."""

    position: tuple[float, float]
    radius: float
    color_id: int

    def __post_init__(self) -> None:
        if self.radius <= 0 or not all(math.isfinite(v) for v in self.position):
            raise ValidationError(f"invalid scene object: {self}")


@dataclass(frozen=True)
class Camera:
    """First-person pinhole camera rigidly mounted at the robot pose."""

    height: float = 0.3
    fov: float = math.pi / 2  # horizontal, radians
    image_size: int = 64

    def __post_init__(self) -> None:
        if not (0 < self.fov < math.pi) or self.height <= 0 or self.image_size < 8:
            raise ValidationError(f"invalid camera: {self}")


@dataclass(frozen=True)
class WorldConfig:
    arena: Arena
    target: SceneObject
    obstacles: tuple[SceneObject, ...] = ()
    distractors: tuple[SceneObject, ...] = ()
    camera: Camera = field(default_factory=Camera)
    step_length: float = 0.15
    success_radius: float = 0.5
    max_steps: int = 30

    def __post_init__(self) -> None:
        if self.success_radius <= 0:
            raise ValidationError("success_radius must be positive")
        if self.max_steps < 1:
            raise ValidationError("max_steps must be >= 1")
        if self.step_length <= 0:
            raise ValidationError("step_length must be positive")
        for obj in (self.target, *self.obstacles):
            x, y = obj.position
            if not self.arena.contains(x, y, margin=obj.radius):
                raise ValidationError(f"object not strictly inside arena: {obj}")

    def contains_pose(self, pose: Pose) -> bool:
        return self.arena.contains(pose.x, pose.y)

    def collides(self, pose: Pose) -> bool:
        """Robot center inside an inflated obstacle disc. Distractors are scenery."""
        for obs in self.obstacles:
            if pose.distance_to(obs.position) < obs.radius + COLLISION_INFLATION:
                return True
        return False

    def at_target(self, pose: Pose) -> bool:
        return pose.distance_to(self.target.position) < self.success_radius

    def without_distractors(self) -> "WorldConfig":
        return replace(self, distractors=())

    # -- JSON document interchange ------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        def obj(o: SceneObject) -> dict[str, Any]:
            return {"position": list(o.position), "radius": o.radius, "color_id": o.color_id}

        return {
            "arena": {
                "x_min": self.arena.x_min,
                "y_min": self.arena.y_min,
                "x_max": self.arena.x_max,
                "y_max": self.arena.y_max,
            },
            "target": obj(self.target),
            "obstacles": [obj(o) for o in self.obstacles],
            "distractors": [obj(o) for o in self.distractors],
            "camera": {
                "height": self.camera.height,
                "fov": self.camera.fov,
                "image_size": self.camera.image_size,
            },
            "step_length": self.step_length,
            "success_radius": self.success_radius,
            "max_steps": self.max_steps,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "WorldConfig":
        def obj(o: dict[str, Any]) -> SceneObject:
            return SceneObject(tuple(o["position"]), o["radius"], o["color_id"])

        try:
            return cls(
                arena=Arena(**d["arena"]),
                target=obj(d["target"]),
                obstacles=tuple(obj(o) for o in d.get("obstacles", [])),
                distractors=tuple(obj(o) for o in d.get("distractors", [])),
                camera=Camera(**d["camera"]),
                step_length=d["step_length"],
                success_radius=d["success_radius"],
                max_steps=d["max_steps"],
            )
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed world document: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "WorldConfig":
        return cls.from_dict(json.loads(text))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "WorldConfig":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))
