"""Planar robot kinematics: poses, action primitives, exact stepping."""

from __future__ import annotations

import math
from dataclasses import dataclass

TAU = math.tau

#: Hard bound on any heading change emitted by experts or candidate samplers.
MAX_TURN = math.pi / 6.0


def wrap_angle(theta: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    w = math.remainder(theta, TAU)
    if w <= -math.pi:
        w += TAU
    return w


@dataclass(frozen=True)
class Pose:
    """Robot state on the plane: position plus heading (radians, CCW)."""

    x: float
    y: float
    theta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.theta)):
            raise ValueError(f"non-finite pose: {self}")

    def distance_to(self, point: tuple[float, float]) -> float:
        return math.hypot(point[0] - self.x, point[1] - self.y)

    def bearing_to(self, point: tuple[float, float]) -> float:
        """World-frame bearing from this pose's position to a point."""
        return math.atan2(point[1] - self.y, point[0] - self.x)


@dataclass(frozen=True)
class ActionDelta:
    """World-frame pose increment (dx, dy, dtheta).

    For actions produced by this package the translation is slaved to the
    heading change: (dx, dy) = (s*cos(theta + dtheta), s*sin(theta + dtheta))
    for step length s and the heading theta the action is applied at.
    """

    dx: float
    dy: float
    dtheta: float

    def __post_init__(self) -> None:
        if not (
            math.isfinite(self.dx) and math.isfinite(self.dy) and math.isfinite(self.dtheta)
        ):
            raise ValueError(f"non-finite action: {self}")

    def heading_change(self) -> float:
        """Direction of the translation component, arctan(dy / dx)."""
        return math.atan2(self.dy, self.dx)


def turn_action(dtheta: float, step_length: float, heading: float = 0.0) -> ActionDelta:
    """Build an action that turns by ``dtheta`` then advances ``step_length``.

    ``heading`` is the robot heading the action will be applied at; with the
    default 0 the returned delta is expressed in the robot body frame.
    """
    a = heading + dtheta
    return ActionDelta(step_length * math.cos(a), step_length * math.sin(a), dtheta)


def clamp_turn(dtheta: float, limit: float = MAX_TURN) -> float:
    return max(-limit, min(limit, dtheta))


def step(pose: Pose, action: ActionDelta) -> Pose:
    """Apply an action to a pose; pure, with heading wrapped to (-pi, pi]."""
    return Pose(pose.x + action.dx, pose.y + action.dy, wrap_angle(pose.theta + action.dtheta))


def body_frame(action: ActionDelta, heading: float) -> ActionDelta:
    """Re-express a world-frame action in the robot body frame at ``heading``."""
    c, s = math.cos(-heading), math.sin(-heading)
    return ActionDelta(
        action.dx * c - action.dy * s,
        action.dx * s + action.dy * c,
        action.dtheta,
    )


def world_frame(action: ActionDelta, heading: float) -> ActionDelta:
    """Inverse of :func:`body_frame`."""
    return body_frame(action, -heading)
