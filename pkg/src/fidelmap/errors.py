"""Exception hierarchy shared by every fidelmap module."""

from __future__ import annotations


class FidelMapError(Exception):
    """Base class for all errors raised by fidelmap."""


class KeyMapError(FidelMapError, ValueError):
    """A dictionary entry or dictionary file is invalid.

    ``lineno`` is the 1-based line of the offending entry when the error
    came from parsing a file, otherwise ``None``.
    """

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class MalformedLine(KeyMapError):
    pass


class InvalidKey(KeyMapError):
    pass


class InvalidValue(KeyMapError):
    pass


class DuplicateKey(KeyMapError):
    pass


class DecodeError(FidelMapError, ValueError):
    """Input bytes could not be decoded under the requested policy."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


class NonAsciiInput(DecodeError):
    pass


class InvalidUtf8(DecodeError):
    pass


class InvalidBoundaryMarker(FidelMapError, ValueError):
    pass


class EmptySample(FidelMapError, ValueError):
    pass


class LengthMismatch(FidelMapError, ValueError):
    pass


class NotAsciiEncodable(FidelMapError, ValueError):
    pass
