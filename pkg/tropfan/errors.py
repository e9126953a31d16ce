"""Exception hierarchy shared by all tropfan modules."""


class TropFanError(Exception):
    """Root of every error raised by the library."""


class InputError(TropFanError, ValueError):
    """Invalid user input: documents, rings, weights, degrees or face ids."""


class NotAComplexError(TropFanError):
    """Two consecutive differentials do not compose to zero."""


class InconsistencyError(TropFanError):
    """An internal invariant failed; indicates a bug rather than bad input."""
