"""Randomized world placement: task families, trial placements, JSON suites."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from ..errors import PlacementError, ValidationError
from . import palette
from .geometry import Pose, wrap_angle
from .world import Arena, Camera, SceneObject, WorldConfig

#: Keep object centers at least this far from arena walls.
WALL_MARGIN = 0.7
#: Fraction of the half field of view the target may start away from center.
FOV_SLACK = 0.8
MAX_PLACEMENT_TRIES = 200


@dataclass(frozen=True)
class WorldFamily:
    """Distribution over worlds and start poses for one task."""

    task: str  # "approach" | "obstacle"
    arena: Arena = field(default_factory=lambda: Arena(0.0, 0.0, 5.0, 5.0))
    camera: Camera = field(default_factory=Camera)
    target_radius: float = 0.25
    obstacle_radius: float = 0.3
    distractor_radius: float = 0.25
    n_obstacles: int = 0
    n_distractors: int = 0
    start_distance: tuple[float, float] = (2.0, 3.5)
    step_length: float = 0.15
    success_radius: float = 0.5
    max_steps: int = 30

    @classmethod
    def approach(cls, **overrides: Any) -> "WorldFamily":
        return cls(task="approach", n_obstacles=0, **overrides)

    @classmethod
    def obstacle(cls, **overrides: Any) -> "WorldFamily":
        return cls(task="obstacle", n_obstacles=1, **overrides)

    @classmethod
    def named(cls, task: str, **overrides: Any) -> "WorldFamily":
        if task == "approach":
            return cls.approach(**overrides)
        if task == "obstacle":
            return cls.obstacle(**overrides)
        raise ValidationError(f"unknown task family: {task!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "task": self.task,
            "arena": [self.arena.x_min, self.arena.y_min, self.arena.x_max, self.arena.y_max],
            "n_obstacles": self.n_obstacles,
            "n_distractors": self.n_distractors,
            "start_distance": list(self.start_distance),
            "step_length": self.step_length,
            "success_radius": self.success_radius,
            "max_steps": self.max_steps,
        }


@dataclass(frozen=True)
class Placement:
    """One benchmark trial: a concrete world plus the robot start pose."""

    world: WorldConfig
    start: Pose
    label: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "world": self.world.to_dict(),
            "start_pose": {"x": self.start.x, "y": self.start.y, "theta": self.start.theta},
            "label": self.label,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Placement":
        sp = d["start_pose"]
        return cls(
            world=WorldConfig.from_dict(d["world"]),
            start=Pose(sp["x"], sp["y"], sp["theta"]),
            label=d.get("label", ""),
        )


def _uniform_point(rng: np.random.Generator, arena: Arena, margin: float) -> tuple[float, float]:
    x = rng.uniform(arena.x_min + margin, arena.x_max - margin)
    y = rng.uniform(arena.y_min + margin, arena.y_max - margin)
    return float(x), float(y)


def sample_placement(
    family: WorldFamily, rng: np.random.Generator, distractor_color: int | None = None
) -> Placement:
    """Draw a world and start pose honoring the initial field-of-view constraint."""
    for _ in range(MAX_PLACEMENT_TRIES):
        target_pos = _uniform_point(rng, family.arena, WALL_MARGIN)
        start_pos = _uniform_point(rng, family.arena, WALL_MARGIN)
        dist = math.hypot(start_pos[0] - target_pos[0], start_pos[1] - target_pos[1])
        if not (family.start_distance[0] <= dist <= family.start_distance[1]):
            continue

        bearing = math.atan2(target_pos[1] - start_pos[1], target_pos[0] - start_pos[0])
        half_fov = family.camera.fov / 2.0
        theta = wrap_angle(bearing + rng.uniform(-FOV_SLACK * half_fov, FOV_SLACK * half_fov))

        obstacles = []
        ok = True
        for _ in range(family.n_obstacles):
            # Pin the obstacle near the start-target segment so avoiding it
            # is actually part of the task.
            frac = rng.uniform(0.4, 0.6)
            mx = start_pos[0] + frac * (target_pos[0] - start_pos[0])
            my = start_pos[1] + frac * (target_pos[1] - start_pos[1])
            off = rng.uniform(-0.25, 0.25, size=2)
            pos = (float(mx + off[0]), float(my + off[1]))
            if not family.arena.contains(pos[0], pos[1], margin=WALL_MARGIN):
                ok = False
                break
            d_start = math.hypot(pos[0] - start_pos[0], pos[1] - start_pos[1])
            d_target = math.hypot(pos[0] - target_pos[0], pos[1] - target_pos[1])
            if d_start < 0.8 or d_target < family.success_radius + 0.35:
                ok = False
                break
            obstacles.append(SceneObject(pos, family.obstacle_radius, palette.OBSTACLE))
        if not ok:
            continue

        distractors = []
        for _ in range(family.n_distractors):
            # Paper protocol: distractor roughly as far from the robot as the
            # target, but away from the direct approach corridor.
            side = rng.choice([-1.0, 1.0])
            ang = bearing + side * rng.uniform(0.45, 0.8)
            r = dist * rng.uniform(0.85, 1.15)
            pos = (start_pos[0] + r * math.cos(ang), start_pos[1] + r * math.sin(ang))
            if not family.arena.contains(pos[0], pos[1], margin=WALL_MARGIN):
                ok = False
                break
            color = distractor_color if distractor_color is not None else palette.DISTRACTOR_GREEN
            distractors.append(SceneObject(pos, family.distractor_radius, color))
        if not ok:
            continue

        world = WorldConfig(
            arena=family.arena,
            target=SceneObject(target_pos, family.target_radius, palette.TARGET),
            obstacles=tuple(obstacles),
            distractors=tuple(distractors),
            camera=family.camera,
            step_length=family.step_length,
            success_radius=family.success_radius,
            max_steps=family.max_steps,
        )
        return Placement(world=world, start=Pose(start_pos[0], start_pos[1], theta), label=family.task)
    raise PlacementError(
        f"could not satisfy placement constraints for task {family.task!r} "
        f"in {MAX_PLACEMENT_TRIES} tries"
    )


def make_suite(family: WorldFamily, n: int, seed: int) -> list[Placement]:
    """Generate a deterministic placement suite for benchmarking."""
    placements = []
    for i in range(n):
        rng = np.random.default_rng(np.random.SeedSequence((seed, i)))
        placements.append(sample_placement(family, rng))
    return placements


def save_suite(placements: list[Placement], path: str | Path) -> None:
    doc = [p.to_dict() for p in placements]
    Path(path).write_text(json.dumps(doc, sort_keys=True, indent=1) + "\n", encoding="utf-8")


def load_suite(path: str | Path) -> list[Placement]:
    p = Path(path)
    if not p.exists():
        from ..errors import MissingArtifactError

        raise MissingArtifactError(f"placement suite not found: {p}")
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
        return [Placement.from_dict(d) for d in doc]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValidationError(f"malformed placement suite {p}: {exc}") from exc
