"""
Exception hierarchy.

Every error raised on purpose by subtile derives from :class:`SubtileError` and from
the builtin exception a caller would naturally catch (``ValueError`` for bad input,
``RuntimeError`` for searches that ran out of room).
"""

EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_RESOURCE = 3
EXIT_INCONCLUSIVE = 4


class SubtileError(Exception):
    exit_code = EXIT_VALIDATION


class FieldMismatchError(SubtileError, ValueError):
    pass


class InvalidGeometryError(SubtileError, ValueError):
    pass


class InvalidPatchError(SubtileError, ValueError):
    pass


class EmptyComplexError(SubtileError, ValueError):
    pass


class UnsupportedRotationError(SubtileError, ValueError):
    pass


class InconsistentPatchError(SubtileError, ValueError):
    pass


class ResourceLimitError(SubtileError, RuntimeError):
    exit_code = EXIT_RESOURCE


class InconclusiveError(SubtileError, RuntimeError):
    exit_code = EXIT_INCONCLUSIVE
