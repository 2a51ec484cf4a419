"""Exact neutrosophic scalars and the thresholding rule of the map engines.

A neutrosophic scalar is ``a + bI`` with integer ``a`` and ``b`` and the
indeterminacy ``I`` satisfying ``I * I = I``. States of every engine take
values in ``{0, 1, I}``; thresholding maps a raw sum back into that set.
"""
from __future__ import division, print_function, absolute_import
from collections import namedtuple
from decimal import Decimal
import enum
from fractions import Fraction
import numbers
import re

import numpy as np

from nmaps.errors import ValidationError
from nmaps.utils import logger

_REAL = r'(?:\d+(?:\.\d*)?|\.\d+)'
_VALUE_PATTERNS = (
    # 2, -1, .3
    ('real', re.compile(r'^([+-]?' + _REAL + r')$')),
    # I, -I, 2I, .2I
    ('indet', re.compile(r'^([+-]?)(' + _REAL + r')?I$')),
    # 2+I, -1+2I, 1-I
    ('real_indet', re.compile(r'^([+-]?' + _REAL + r')([+-])(' + _REAL + r')?I$')),
    # 2I+4, I-1
    ('indet_real', re.compile(r'^([+-]?)(' + _REAL + r')?I([+-])(' + _REAL + r')$')),
)


def _check_part(x, what):
    if isinstance(x, bool) or not isinstance(x, (numbers.Integral, Fraction)):
        raise TypeError("{} must be an integer or a Fraction. {} was "
                        "passed.".format(what, type(x)))
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    if isinstance(x, numbers.Integral):
        return int(x)
    return x


class NeutroValue(namedtuple('NeutroValue', ['real', 'indet'])):
    """A scalar ``real + indet * I``.

    Two values are equal iff both fields are equal. Both parts are integers,
    except for values read from decimal literals such as ``.3`` or ``.2I``,
    which keep exact ``fractions.Fraction`` parts and are only used for
    classification.

    Parameters
    ----------
    real : int or fractions.Fraction
        The determinate part.
    indet : int or fractions.Fraction
        The coefficient of ``I``.
    """
    __slots__ = ()

    def __new__(cls, real=0, indet=0):
        real = _check_part(real, "Real part")
        indet = _check_part(indet, "Coefficient of I")
        return super(NeutroValue, cls).__new__(cls, real, indet)

    def __add__(self, other):
        return nv_add(self, as_value(other))

    __radd__ = __add__

    def __mul__(self, other):
        return nv_mul(self, as_value(other))

    __rmul__ = __mul__

    def __neg__(self):
        return NeutroValue(-self.real, -self.indet)

    def __sub__(self, other):
        return nv_add(self, -as_value(other))

    def __str__(self):
        return format_value(self)

    def __repr__(self):
        return "NeutroValue('{}')".format(format_value(self))

    @property
    def is_zero(self):
        return self.real == 0 and self.indet == 0

    @property
    def is_indeterminate(self):
        return self.indet != 0

    @property
    def is_fractional(self):
        return isinstance(self.real, Fraction) or isinstance(self.indet, Fraction)


ZERO = NeutroValue(0, 0)
ONE = NeutroValue(1, 0)
MINUS_ONE = NeutroValue(-1, 0)
INDET = NeutroValue(0, 1)


def as_value(x):
    """Coerce an int, Fraction, token string or NeutroValue to NeutroValue."""
    if isinstance(x, NeutroValue):
        return x
    if isinstance(x, str):
        return parse_value(x)
    if isinstance(x, (numbers.Integral, Fraction)) and not isinstance(x, bool):
        return NeutroValue(x, 0)
    if isinstance(x, np.integer):
        return NeutroValue(int(x), 0)
    raise TypeError("Cannot read {!r} as a neutrosophic value.".format(x))


def nv_add(x, y):
    """Return ``x + y``, adding real and indeterminate parts separately."""
    return NeutroValue(x.real + y.real, x.indet + y.indet)


def nv_mul(x, y):
    """Return ``x * y`` using ``I * I = I``.

    ``(a + bI)(c + dI) = ac + (ad + bc + bd)I``.
    """
    a, b = x
    c, d = y
    return NeutroValue(a * c, a * d + b * c + b * d)


class ThresholdMode(enum.Enum):
    """How a raw value carrying both a real and an I part is thresholded."""
    REAL_DOMINANT = 'real'
    INDET_DOMINANT = 'indet'


class ThresholdPolicy(namedtuple('ThresholdPolicy', ['k', 'mode'])):
    """Threshold constant ``k >= 1`` and a :class:`ThresholdMode`."""
    __slots__ = ()

    def __new__(cls, k=1, mode=ThresholdMode.REAL_DOMINANT):
        if isinstance(k, bool) or not isinstance(k, numbers.Integral):
            raise TypeError("Threshold k must be an integer. {} was "
                            "passed.".format(type(k)))
        if k < 1:
            msg = "Threshold k must be at least 1. {} was passed.".format(k)
            logger.error(msg)
            raise ValidationError(msg)
        if not isinstance(mode, ThresholdMode):
            try:
                mode = ThresholdMode(mode)
            except ValueError:
                msg = ("Unknown threshold mode {!r}. Use 'real' or "
                       "'indet'.".format(mode))
                logger.error(msg)
                raise ValidationError(msg)
        return super(ThresholdPolicy, cls).__new__(cls, int(k), mode)


DEFAULT_POLICY = ThresholdPolicy()


def threshold_policy(k=1, mode='real'):
    """Build a validated :class:`ThresholdPolicy` from plain tokens."""
    return ThresholdPolicy(k=k, mode=mode)


def threshold_scalar(v, policy=DEFAULT_POLICY):
    """Map a raw value onto ``{0, 1, I}``.

    Parameters
    ----------
    v : NeutroValue
        Raw coordinate of a vector x matrix product.
    policy : ThresholdPolicy
        Threshold constant and mode.

    Returns
    -------
    value : NeutroValue
        One of ``ZERO``, ``ONE`` or ``INDET``.
    """
    v = as_value(v)
    k = policy.k
    if (policy.mode is ThresholdMode.INDET_DOMINANT
            and v.indet >= k and v.indet > v.real):
        return INDET
    if v.real >= k:
        return ONE
    if v.indet != 0:
        return INDET
    return ZERO


def threshold_arrays(real, indet, policy=DEFAULT_POLICY):
    """Vectorised :func:`threshold_scalar` over the two parts of a vector.

    Parameters
    ----------
    real, indet : ndarray
        Integer arrays of the same shape.
    policy : ThresholdPolicy

    Returns
    -------
    real, indet : ndarray
        Thresholded parts; each position is (0, 0), (1, 0) or (0, 1).
    """
    k = policy.k
    if policy.mode is ThresholdMode.INDET_DOMINANT:
        indet_first = (indet >= k) & (indet > real)
    else:
        indet_first = np.zeros(real.shape, dtype=bool)
    on = ~indet_first & (real >= k)
    undecided = indet_first | (~on & (indet != 0))
    return on.astype(np.int64), undecided.astype(np.int64)


def parse_value(token):
    """Parse the textual form of a value.

    Accepts ``0``, ``1``, ``-1``, ``I``, ``-I``, ``2I``, ``2+I``, ``-1+I``,
    ``1-2I``, ``2I+4`` and decimal reals such as ``.3``.

    Raises
    ------
    ValidationError if `token` is not a value.
    """
    text = token.strip()
    for kind, pattern in _VALUE_PATTERNS:
        match = pattern.match(text)
        if match is None:
            continue
        if kind == 'real':
            return NeutroValue(_read_real(match.group(1)), 0)
        if kind == 'indet':
            sign, coef = match.groups()
            return NeutroValue(0, _read_coef(sign, coef))
        if kind == 'real_indet':
            real, sign, coef = match.groups()
            return NeutroValue(_read_real(real), _read_coef(sign, coef))
        sign, coef, real_sign, real = match.groups()
        return NeutroValue(_read_real(real_sign + real),
                           _read_coef(sign, coef))
    raise ValidationError("Malformed value {!r}.".format(token))


def _read_real(text):
    if '.' in text:
        return Fraction(text)
    return int(text)


def _read_coef(sign, digits):
    coef = _read_real(digits) if digits else 1
    return -coef if sign == '-' else coef


def _format_real(x):
    if isinstance(x, Fraction):
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return format(d.normalize(), 'f')
    return str(x)


def _format_coef(b):
    if b == 1:
        return 'I'
    if b == -1:
        return '-I'
    return _format_real(b) + 'I'


def format_value(v):
    """Canonical text of a value, the inverse of :func:`parse_value`."""
    v = as_value(v)
    if v.indet == 0:
        return _format_real(v.real)
    if v.real == 0:
        return _format_coef(v.indet)
    coef = _format_coef(v.indet)
    if v.indet > 0:
        coef = '+' + coef
    return _format_real(v.real) + coef
