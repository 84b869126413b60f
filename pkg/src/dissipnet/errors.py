"""Exception types shared across the package."""


class DissipnetError(Exception):
    """Base class for package errors."""


class DimensionError(DissipnetError, ValueError):
    """Input has the wrong shape or an unsupported dimension."""


class NonFiniteError(DissipnetError, ArithmeticError):
    """A computation produced or received a non-finite value."""


class NonFiniteStateError(NonFiniteError):
    """An integrator stage evaluated to a non-finite value."""

    def __init__(self, message: str, stage: int | None = None):
        super().__init__(message)
        self.stage = stage


class NonFiniteLossError(NonFiniteError):
    """A training rollout produced a non-finite state or loss."""

    def __init__(self, message: str, snippet_index: int | None = None):
        super().__init__(message)
        self.snippet_index = snippet_index


class TrainingDivergedError(DissipnetError, RuntimeError):
    """Training kept producing non-finite losses and cannot continue."""


class GenerationError(DissipnetError, RuntimeError):
    """Ground-truth simulation blew up while generating a dataset."""


class InvalidSpectrumError(DissipnetError, ValueError):
    """Spectrum requested over a window containing non-finite samples."""


class ConfigError(DissipnetError, ValueError):
    """Configuration file is missing, malformed, or inconsistent."""


class CheckpointVersionError(DissipnetError, ValueError):
    """Checkpoint file carries an unsupported format version."""
