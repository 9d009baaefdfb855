"""Exception hierarchy shared by all symforms modules."""


class SymformsError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(SymformsError):
    pass


class SpaceMismatch(SymformsError):
    """Two forms (or a form and an operator) live over different spaces."""


class JacobiError(SymformsError):
    """Structure constants violate the Jacobi identity.

    Carries the offending basis triple so callers can report it.
    """

    def __init__(self, triple, message=None):
        self.triple = tuple(triple)
        super().__init__(message or f"Jacobi identity fails on basis triple {self.triple}")


class NotSemisimple(SymformsError):
    """Killing form is degenerate."""


class NotInvolution(SymformsError):
    pass


class NotAutomorphism(SymformsError):
    pass


class DegenerateRestriction(SymformsError):
    """Killing form degenerate on an eigenspace of the involution."""


class DualNotCompact(SymformsError):
    """Sign-twisted algebra does not have negative definite Killing form."""


class NotInvariantPolynomial(SymformsError):
    pass


class NotInvariant(SymformsError):
    pass


class NotBiinvariant(SymformsError):
    pass


class NotDefinite(SymformsError):
    """An inner product expected to be positive definite is not."""


class DegreeCapExceeded(SymformsError):
    pass


class CapInsufficient(SymformsError):
    """Generator search caps too low to span the invariant-form algebra."""


class ParseError(SymformsError):
    """Malformed algebra definition file; message carries field diagnostics."""
