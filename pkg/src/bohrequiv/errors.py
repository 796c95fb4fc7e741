"""Exception hierarchy. Every error raised on purpose derives from BohrEquivError."""


class BohrEquivError(Exception):
    """Base class; the CLI reports ``type(err).__name__`` as the error class."""


class EmptyExponentSet(BohrEquivError, ValueError):
    pass


class NotABasis(BohrEquivError, ValueError):
    pass


class DimensionMismatch(BohrEquivError, ValueError):
    pass


class ToleranceInExactMode(BohrEquivError, ValueError):
    pass


class OutsideStrip(BohrEquivError, ValueError):
    pass


class BadDiscretization(BohrEquivError, ValueError):
    pass


class ExponentSetMismatch(BohrEquivError, ValueError):
    pass


class MixedCoefficientModes(BohrEquivError, TypeError):
    pass


class ResidueOutOfRange(BohrEquivError, ValueError):
    pass


class InadmissibleResidues(BohrEquivError, ValueError):
    """Residue tuple not induced by any single integer shift of the parameters."""


class BudgetExceeded(BohrEquivError, ValueError):
    pass


class EmptyCloud(BohrEquivError, ValueError):
    pass


class NoCertificate(BohrEquivError, ValueError):
    pass


class NotEquivalent(BohrEquivError, ValueError):
    pass


class DocumentError(BohrEquivError, ValueError):
    """Malformed sum document; ``path`` locates the offending field."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
