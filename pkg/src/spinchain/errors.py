"""Exception types raised by the toolkit."""


class SpinChainError(Exception):
    """Base class for all toolkit errors."""


class InvalidSpecError(SpinChainError, ValueError):
    """A chain specification violates a structural constraint."""


class ModelParseError(SpinChainError, ValueError):
    """A model document is malformed; the message carries field context."""


class DomainError(SpinChainError, ValueError):
    """An argument lies outside an operation's domain."""


class NotSectorConservingError(SpinChainError, ValueError):
    """Sector build requested for a model that mixes magnetization sectors
    (some bond has jx != jy); use the full-space builder instead."""


class ResourceLimitError(SpinChainError, RuntimeError):
    """A requested system size exceeds the configured cap."""


class NumericalError(SpinChainError, RuntimeError):
    """A numerical accuracy contract (residual, orthonormality) failed."""


class InconsistentStateError(SpinChainError, RuntimeError):
    """A computed quantum number matches no admissible value; usually a
    symptom of an eigensolver or degeneracy-handling bug."""


class DegenerateInputError(SpinChainError, ValueError):
    """Inputs are linearly dependent where independence is required."""
