"""Exception hierarchy shared across the package."""


class ModelError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ModelError):
    """An input is non-finite, out of range, or structurally malformed."""


class DegenerateSectorError(ModelError):
    """A sector has zero output where positive output is required."""


class InfeasibleAllocationError(ModelError):
    """The labor allocation formula demands more labor than exists."""


class DegenerateBaseError(ModelError):
    """Growth rate requested against a zero base value."""


class InsufficientDataError(ModelError):
    """The panel has too few periods for the requested computation."""


class NotALoopError(ModelError):
    """Circularity check requested on a panel whose endpoints differ."""


class MethodDomainError(ModelError):
    """The chosen index method cannot handle this panel (e.g. zero quantities)."""


class NoSolutionError(ModelError):
    """The catch-up equation has no finite solution."""


class CalibrationError(ModelError):
    """A calibration bracket failed to enclose a root."""


class PanelFormatError(ValidationError):
    """A CSV panel or config stream could not be parsed."""
