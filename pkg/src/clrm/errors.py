"""Exception types shared across the package."""


class ClrmError(Exception):
    """Base class for package-specific failures."""


class ConfigurationError(ClrmError):
    """A config file, asset definition, or well layout is invalid."""


class GenerationError(ClrmError):
    """Geostatistical field generation failed (e.g. covariance not PD)."""


class SimulationError(ClrmError):
    """The flow simulator failed to advance; carries step diagnostics."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class CheckpointError(ClrmError):
    """A parameter checkpoint or its manifest is unreadable/mismatched."""


class TrainingError(ClrmError):
    """The training loop hit an unrecoverable condition."""
