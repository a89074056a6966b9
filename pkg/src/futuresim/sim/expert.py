"""Scripted expert controller standing in for the human demonstrator.

Proportional pursuit of the target plus an inverse-square obstacle repulsion
term acting on the heading. The functional form is this package's choice;
its gains are exposed so experiments can vary them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import MAX_TURN, ActionDelta, Pose, clamp_turn, turn_action, wrap_angle
from .world import WorldConfig


@dataclass(frozen=True)
class ExpertConfig:
    k_p: float = 1.0
    repulsion_gain: float = 0.4
    sensing_radius: float = 1.5
    #: Floor on surface distance in the inverse-square law.
    min_clearance: float = 0.05


DEFAULT_EXPERT = ExpertConfig()


def expert_turn(world: WorldConfig, pose: Pose, cfg: ExpertConfig = DEFAULT_EXPERT) -> float:
    """Heading change the expert commands at ``pose``, clamped to +/- 30 deg."""
    err = wrap_angle(pose.bearing_to(world.target.position) - pose.theta)
    repulsion = 0.0
    for obs in world.obstacles:
        clearance = pose.distance_to(obs.position) - obs.radius
        if clearance >= cfg.sensing_radius:
            continue
        phi = wrap_angle(pose.bearing_to(obs.position) - pose.theta)
        if abs(phi) >= math.pi / 2:
            continue  # behind or abeam: not in the way
        # Turn away from the obstacle, harder the closer and the more head-on
        # it is. An obstacle dead ahead is a tie; break it by turning right.
        side = 1.0 if phi >= 0.0 else -1.0
        d = max(clearance, cfg.min_clearance)
        repulsion -= side * cfg.repulsion_gain * math.cos(phi) / (d * d)
    dtheta = clamp_turn(cfg.k_p * err + repulsion, MAX_TURN)
    return dtheta


def expert_action(world: WorldConfig, pose: Pose, cfg: ExpertConfig = DEFAULT_EXPERT) -> ActionDelta:
    """Full expert action at ``pose``: turn command plus its slaved translation."""
    return turn_action(expert_turn(world, pose, cfg), world.step_length, pose.theta)
