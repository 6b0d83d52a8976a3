"""Exception types shared across the package."""


class ConfcohomError(Exception):
    """Base class for all library errors."""


class ParameterError(ConfcohomError, ValueError):
    """Invalid parameters: bad indices, bad mode, malformed input."""


class ContextMismatchError(ConfcohomError):
    """Arithmetic between elements of different contexts."""


class ParseError(ConfcohomError, ValueError):
    """Malformed element text or JSON."""


class SizeCapExceeded(ConfcohomError):
    """A requested oracle slice is larger than the configured cap."""


class OracleInconsistencyError(ConfcohomError):
    """The linear-algebra model contradicts the claimed basis.

    Raised loudly: a non-integral projection or a residue outside the
    candidate basis means either the basis claim or the reducer is wrong.
    """


class ZeroWitnessError(ConfcohomError):
    """The certificate's witness coefficient vanished (failed certificate)."""


class UnsupportedCaseError(ConfcohomError):
    """Parameters outside the certified scope (e.g. odd ambient dimension)."""


class ConfigurationError(ConfcohomError, ValueError):
    """A point configuration violates a distinctness requirement."""
