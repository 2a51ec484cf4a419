"""Exceptions raised by nmaps.

Everything subclasses ValueError, so callers that only know about ValueError
still catch them.
"""
from __future__ import division, print_function, absolute_import


class NMapsError(ValueError):
    """Base class for all errors raised on bad input."""


class DimensionError(NMapsError):
    """Shapes or lengths of operands do not agree."""


class AlignmentError(NMapsError):
    """Maps to be combined do not share the same labels."""


class ValidationError(NMapsError):
    """An invariant or precondition of a structure does not hold."""


class DomainError(NMapsError):
    """An argument is outside the domain of an operation."""


class MapFileError(NMapsError):
    """A map file could not be loaded.

    Parameters
    ----------
    msg : str
        Summary message.
    diagnostics : list of nmaps.mapfile.Diagnostic
        Every problem found in the file, in order of position.
    """
    def __init__(self, msg, diagnostics=()):
        super(MapFileError, self).__init__(msg)
        self.diagnostics = list(diagnostics)
