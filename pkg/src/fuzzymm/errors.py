"""Exception hierarchy shared by every module of the package."""


class FuzzyMemoryError(Exception):
    """Base class for errors raised by fuzzymm."""


class DimensionError(FuzzyMemoryError, ValueError):
    """Operand shapes do not agree."""


class DomainError(FuzzyMemoryError, ValueError):
    """A value lies outside the unit interval."""


class ConfigError(FuzzyMemoryError, ValueError):
    """A model or pipeline was configured inconsistently."""


class NotFoundError(FuzzyMemoryError, KeyError):
    """A named object (connective family, class label, ...) does not exist."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class FormatError(FuzzyMemoryError, ValueError):
    """An input file or in-memory image could not be decoded."""


class FileError(FuzzyMemoryError, OSError):
    """A required input file or directory is missing or unreadable."""
