"""Exception types shared across the package."""


class MilnorError(Exception):
    """Base class for every error raised by this package."""


class NotRational(MilnorError):
    pass


class NonIntegral(MilnorError):
    """A class function failed to decompose with integer multiplicities."""


class GroupMismatch(MilnorError):
    pass


class Unsupported(MilnorError):
    """Requested group or input lies outside what the catalog covers."""


class ShapeMismatch(MilnorError):
    pass


class NotInPoset(MilnorError):
    pass


class MissingCatalogEntry(MilnorError):
    pass


class MissingModel(MilnorError):
    pass


class EvenNotSupported(MilnorError):
    pass


class DimensionMismatch(MilnorError):
    pass


class NotEffective(MilnorError):
    pass


class MalformedPD(MilnorError):
    pass


class ParseError(MilnorError):
    pass
