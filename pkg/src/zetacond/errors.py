"""Exception taxonomy shared by all modules.

Library code raises these instead of bare ValueError so the CLI can map
every domain/usage violation onto exit code 2 uniformly.
"""


class ZetacondError(Exception):
    """Base class for all library errors."""


class ConfigurationError(ZetacondError):
    """A configuration object or limit argument violates its invariants."""


class DomainError(ZetacondError):
    """Argument outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class NearPoleError(DomainError):
    """Evaluation requested inside the guard band around a pole."""


class UnsupportedRangeError(ZetacondError):
    """Argument outside the validated desk-scale envelope."""


class IncompleteScanError(ZetacondError):
    """Zero scan found fewer/more sign changes than the counting formula allows."""


class ZeroTableParseError(ZetacondError):
    """Malformed zero-table file; carries the offending line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DegenerateConditionalError(ZetacondError):
    """Conditioning with |rho| = 1 leaves no conditional distribution."""


class InsufficientDataError(ZetacondError):
    """Too few samples (or populated bins) for the requested estimator."""


class DegenerateModulusError(ZetacondError):
    """Corrected prime sum for the modulus exhausts the full prime sum."""


class DeltaLookupError(ZetacondError, KeyError):
    """Requested lag was not part of the sampled configuration."""
