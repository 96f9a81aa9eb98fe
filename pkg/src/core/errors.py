"""
Error types shared by every grtab module.

Every failure a caller can provoke with bad input derives from InputError and
maps to exit code 1; KTooLarge is a refusal and maps to exit code 2.
Localization (a frozen denominator that does not clear) is reported through
result flags, never raised.
"""


class GrtabError(Exception):
    """Base class for all grtab errors."""

    exit_code = 1


class InputError(GrtabError):
    """Malformed or out-of-domain input."""


class ColumnNotStrict(InputError):
    pass


class OutOfRange(InputError):
    pass


class RaggedRows(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NotAFactor(InputError):
    pass


class ContentMismatch(InputError):
    pass


class NotInLattice(InputError):
    pass


class NotFundamental(InputError):
    pass


class OutOfWindow(InputError):
    pass


class ParityError(InputError):
    pass


class IncomparableDegrees(InputError):
    pass


class FrozenVertex(InputError):
    pass


class AmbiguousMax(InputError):
    pass


class NotExpressible(InputError):
    pass


class BadDimensions(InputError):
    pass


class SingularFrozen(InputError):
    pass


class FormatError(InputError):
    """A CLI payload that cannot be parsed."""


class KTooLarge(GrtabError):
    """The requested symmetric-group sweep exceeds the configured cap."""

    exit_code = 2

    def __init__(self, k: int, cap: int, what: str = "ch(T)"):
        self.k = k
        self.cap = cap
        super().__init__(
            f"{what} needs a sweep over S_{k}, above the cap of {cap}; "
            f"raise it with --max-k / GRTAB_MAX_K, or pass to the Zelevinsky dual "
            f"of the monomial (grtab zelevinsky) and compute at the smaller size"
        )
