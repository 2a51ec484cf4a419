"""Package-wide utilities."""
from __future__ import division, print_function, absolute_import
import logging


# Text rendering shared by traces, exports and the map-file format.
UNION = u'∪'
ABSENT_SYMBOL = u'∞'

# Matrix products are done in int64. Operands whose worst-case dot product
# could pass this bound are refused.
INT_BOUND = 2 ** 62

LOG_FORMAT = '%(levelname)s nmaps.%(module)s: %(message)s'


def _create_logger(name='nmaps'):
    logger = logging.getLogger(name)
    logger.setLevel(logging.WARNING)
    # One stderr handler, even if the package is imported twice.
    if not any(getattr(h, '_nmaps', False) for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._nmaps = True
        logger.addHandler(handler)
    return logger


logger = _create_logger()


def set_log_level(verbosity):
    """Set the level of the package logger.

    Parameters
    ----------
    verbosity : int or str
        A `logging` level, or its name in any case (``'debug'``).
    """
    if not isinstance(verbosity, int):
        verbosity = str(verbosity).upper()
    logger.setLevel(verbosity)
