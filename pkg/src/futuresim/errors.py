"""Exception hierarchy shared across the package.

Every error carries an ``exit_code`` so the CLI can map failures onto its
documented exit-code contract (2 validation, 3 runtime, 4 missing artifact).
"""

from __future__ import annotations


class FuturesimError(Exception):
    """Base class for all package errors."""

    exit_code = 3


class ValidationError(FuturesimError):
    """Invalid configuration, arguments, or input data."""

    exit_code = 2


class MissingArtifactError(FuturesimError):
    """A required file (checkpoint, dataset, frame) does not exist."""

    exit_code = 4


class TrainingDivergedError(FuturesimError):
    """NaN/inf encountered in a loss or parameter tensor during training."""


class PolicyError(FuturesimError):
    """A policy raised while being queried during a rollout."""


class PlacementError(FuturesimError):
    """A randomized world placement could not be satisfied in bounded retries."""


class OutsideArenaError(ValidationError):
    """A pose handed to the renderer lies outside the arena."""


class DatasetVersionError(ValidationError):
    """On-disk dataset declares an unsupported format version."""


class CorruptManifestError(ValidationError):
    """Dataset manifest is unreadable or structurally invalid."""


class MissingFrameError(MissingArtifactError):
    """Dataset manifest references a frame file that is not on disk."""


class CheckpointMismatchError(ValidationError):
    """A critic checkpoint is paired with a predictor it was not trained against."""


class NotFittedError(ValidationError):
    """An estimator method requiring a fitted model was called before fit."""
