"""Deterministic 2D navigation world: kinematics, renderer, expert, rollouts."""

from .geometry import (
    MAX_TURN,
    ActionDelta,
    Pose,
    body_frame,
    clamp_turn,
    step,
    turn_action,
    world_frame,
    wrap_angle,
)
from .expert import DEFAULT_EXPERT, ExpertConfig, expert_action, expert_turn
from .placements import Placement, WorldFamily, load_suite, make_suite, sample_placement, save_suite
from .render import render, silhouette_centroid_col
from .rollout import (
    ConstantTurnPolicy,
    ExpertPolicy,
    Frame,
    FunctionPolicy,
    Outcome,
    OutcomeKind,
    Trajectory,
    rollout,
    success,
)
from .world import Arena, Camera, SceneObject, WorldConfig

__all__ = [
    "MAX_TURN",
    "ActionDelta",
    "Pose",
    "body_frame",
    "clamp_turn",
    "step",
    "turn_action",
    "world_frame",
    "wrap_angle",
    "DEFAULT_EXPERT",
    "ExpertConfig",
    "expert_action",
    "expert_turn",
    "Placement",
    "WorldFamily",
    "load_suite",
    "make_suite",
    "sample_placement",
    "save_suite",
    "render",
    "silhouette_centroid_col",
    "ConstantTurnPolicy",
    "ExpertPolicy",
    "Frame",
    "FunctionPolicy",
    "Outcome",
    "OutcomeKind",
    "Trajectory",
    "rollout",
    "success",
    "Arena",
    "Camera",
    "SceneObject",
    "WorldConfig",
]
