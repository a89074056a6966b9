"""Trial protocol: drive a policy through the world and record everything.

Policies see only the rendered image. The engine clamps the returned heading
change and recomputes the translation from the current heading and the
world's step length, so every recorded action replays exactly through
:func:`futuresim.sim.geometry.step`. Scripted controllers that legitimately
use privileged state (the expert) receive the pose through an optional
``observe_pose`` hook.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Protocol, runtime_checkable

import numpy as np

from ..errors import PolicyError
from .expert import ExpertConfig, DEFAULT_EXPERT, expert_turn
from .geometry import ActionDelta, Pose, clamp_turn, step, turn_action
from .render import render
from .world import WorldConfig


class OutcomeKind(enum.Enum):
    SUCCESS = "success"
    TIMEOUT = "timeout"
    OUT_OF_BOUNDS = "out_of_bounds"
    COLLISION = "collision"


@dataclass(frozen=True)
class Outcome:
    kind: OutcomeKind
    steps_taken: int


@dataclass
class Frame:
    """One recorded step: the view at ``pose`` and the action taken there.

    The terminal frame carries ``action=None``.
    """

    image: np.ndarray
    pose: Pose
    action: ActionDelta | None


@dataclass
class Trajectory:
    frames: list[Frame]
    outcome: Outcome
    world: WorldConfig

    def __len__(self) -> int:
        return len(self.frames)

    def path(self) -> np.ndarray:
        """(N, 2) array of visited positions, for trajectory similarity metrics."""
        return np.array([[f.pose.x, f.pose.y] for f in self.frames], dtype=np.float64)


@runtime_checkable
class Policy(Protocol):
    def act(self, image: np.ndarray) -> ActionDelta: ...


class FunctionPolicy:
    """Adapter turning a plain ``image -> ActionDelta`` callable into a policy."""

    def __init__(self, fn: Callable[[np.ndarray], ActionDelta]):
        self._fn = fn

    def act(self, image: np.ndarray) -> ActionDelta:
        return self._fn(image)


class ConstantTurnPolicy:
    """Always command the same heading change; handy for protocol tests."""

    def __init__(self, dtheta: float, step_length: float = 0.15):
        self.dtheta = dtheta
        self.step_length = step_length

    def act(self, image: np.ndarray) -> ActionDelta:
        return turn_action(self.dtheta, self.step_length)


class ExpertPolicy:
    """The scripted expert wrapped as a rollout policy (pose-aware)."""

    def __init__(self, world: WorldConfig, cfg: ExpertConfig = DEFAULT_EXPERT):
        self.world = world
        self.cfg = cfg
        self._pose: Pose | None = None

    def observe_pose(self, pose: Pose) -> None:
        self._pose = pose

    def act(self, image: np.ndarray) -> ActionDelta:
        if self._pose is None:
            raise PolicyError("expert policy queried before observing a pose")
        return turn_action(
            expert_turn(self.world, self._pose, self.cfg), self.world.step_length
        )


def _terminal_kind(world: WorldConfig, pose: Pose, terminate_on_success: bool) -> OutcomeKind | None:
    if terminate_on_success and world.at_target(pose):
        return OutcomeKind.SUCCESS
    if world.collides(pose):
        return OutcomeKind.COLLISION
    if not world.contains_pose(pose):
        return OutcomeKind.OUT_OF_BOUNDS
    return None


def rollout(
    world: WorldConfig,
    start: Pose,
    policy: Policy | Callable[[np.ndarray], ActionDelta],
    seed: int = 0,
    max_steps: int | None = None,
    terminate_on_success: bool = True,
) -> Trajectory:
    """Run one trial from ``start`` and record every frame including the terminal one.

    Termination checks run after each step in the order success, collision,
    out-of-bounds; hitting ``max_steps`` without success is a timeout. Data
    collection disables the success check (``terminate_on_success=False``) to
    keep the expert driving for a fixed number of frames.
    """
    if callable(policy) and not isinstance(policy, Policy):
        policy = FunctionPolicy(policy)
    if max_steps is None:
        max_steps = world.max_steps

    reset = getattr(policy, "reset", None)
    if reset is not None:
        reset(np.random.default_rng(seed))

    frames: list[Frame] = []
    pose = start
    kind = _terminal_kind(world, pose, terminate_on_success)
    if kind is OutcomeKind.OUT_OF_BOUNDS:
        raise PolicyError(f"rollout started outside the arena: {start}")
    steps = 0
    while kind is None and steps < max_steps:
        image = render(world, pose)
        observe = getattr(policy, "observe_pose", None)
        if observe is not None:
            observe(pose)
        try:
            proposed = policy.act(image)
        except Exception as exc:  # noqa: BLE001 - contract: surface as PolicyError
            raise PolicyError(f"policy failed at step {steps}: {exc}") from exc
        applied = turn_action(clamp_turn(proposed.dtheta), world.step_length, pose.theta)
        frames.append(Frame(image, pose, applied))
        pose = step(pose, applied)
        steps += 1
        kind = _terminal_kind(world, pose, terminate_on_success)

    if kind is None:
        kind = OutcomeKind.TIMEOUT
    if kind is OutcomeKind.OUT_OF_BOUNDS:
        # The terminal pose is outside the arena; the renderer cannot see from
        # there, so the terminal frame repeats the last legal view.
        terminal_image = frames[-1].image.copy() if frames else render(world, start)
    else:
        terminal_image = render(world, pose)
    frames.append(Frame(terminal_image, pose, None))
    return Trajectory(frames=frames, outcome=Outcome(kind, steps), world=world)


def success(world: WorldConfig, traj: Trajectory) -> bool:
    """True iff the trial ended by reaching the target."""
    return traj.outcome.kind is OutcomeKind.SUCCESS
