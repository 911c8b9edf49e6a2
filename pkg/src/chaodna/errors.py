"""Exception hierarchy shared by every chaodna module."""


class ChaodnaError(Exception):
    """Base class for all library errors."""


class DataError(ChaodnaError):
    """Input data is malformed or inconsistent (CLI exit code 2)."""


class KeyFormatError(DataError):
    pass


class LengthError(KeyFormatError):
    pass


class CharError(KeyFormatError):
    def __init__(self, index, char):
        super().__init__(f"non-hex character {char!r} at index {index}")
        self.index = index
        self.char = char


class OffsetError(DataError):
    pass


class DomainError(DataError, ValueError):
    pass


class RegimeError(DomainError):
    pass


class ShapeError(DataError):
    pass


class RuleMismatchError(DataError):
    pass


class TooSmallError(ShapeError):
    pass


class FormatError(DataError):
    pass


class FileError(DataError):
    pass
