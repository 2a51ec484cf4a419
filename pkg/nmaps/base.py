"""Machinery shared by the cognitive and relational map engines."""
from __future__ import division, print_function, absolute_import
from collections import namedtuple
import threading

import numpy as np

from nmaps.errors import AlignmentError, DimensionError, ValidationError
from nmaps.neutro import INDET, ONE, ZERO, as_value
from nmaps.ngraph import EdgeKind
from nmaps.nmatrix import NMatrix, NVector, format_component, is_integral
from nmaps.utils import logger

_TRISTATE = frozenset([ZERO, ONE, INDET])
_BINARY = frozenset([ZERO, ONE])


class FixedPoint(namedtuple('FixedPoint', ['state'])):
    """A component whose state no longer changes."""
    __slots__ = ()
    is_fixed = True

    @property
    def states(self):
        return (self.state,)

    def __str__(self):
        return 'FIXED{}'.format(format_component(self.state))


class LimitCycle(namedtuple('LimitCycle', ['states'])):
    """A component repeating ``len(states) >= 2`` states in order."""
    __slots__ = ()
    is_fixed = False

    def __str__(self):
        return 'CYCLE({})'.format(', '.join(format_component(s)
                                            for s in self.states))


def _minimal_period(seq):
    n = len(seq)
    for p in range(1, n + 1):
        if n % p == 0 and all(seq[j] == seq[j % p] for j in range(n)):
            return p
    return n


def classify_cycle(cycle):
    """Per-component verdicts of a repeating segment of joint states.

    Parameters
    ----------
    cycle : sequence of NVector
        The states between two visits of the same joint state.

    Returns
    -------
    verdicts : tuple of FixedPoint or LimitCycle
        A component constant over the segment is a fixed point; otherwise a
        limit cycle over its own (possibly shorter) period.
    """
    verdicts = []
    for i in range(cycle[0].k):
        projection = [s[i] for s in cycle]
        period = _minimal_period(projection)
        if period == 1:
            verdicts.append(FixedPoint(projection[0]))
        else:
            verdicts.append(LimitCycle(tuple(projection[:period])))
    return tuple(verdicts)


class StateVector(NVector):
    """An n-vector of node states, each one of ``0``, ``1`` or ``I``.

    Parameters
    ----------
    components : sequence of sequences
        One state vector per component.
    """
    def __init__(self, components):
        super(StateVector, self).__init__(components)
        for i, comp in enumerate(self.components):
            for v in comp:
                if v not in _TRISTATE:
                    msg = ("Component {} holds {}; states take values in "
                           "0, 1 and I.".format(i + 1, v))
                    logger.error(msg)
                    raise ValidationError(msg)

    @classmethod
    def zeros(cls, lengths):
        return cls([[ZERO] * n for n in lengths])

    @classmethod
    def from_on_labels(cls, labels, on):
        """State with the nodes named in `on` switched on.

        A label is switched on in every component that has it.

        Parameters
        ----------
        labels : sequence of sequences of str
            Node labels of each component.
        on : iterable of str

        Raises
        ------
        ValidationError if a label of `on` is in no component.
        """
        on = list(on)
        known = set(lab for comp in labels for lab in comp)
        unknown = [lab for lab in on if lab not in known]
        if unknown:
            msg = "Unknown node label(s): {}.".format(', '.join(unknown))
            logger.error(msg)
            raise ValidationError(msg)
        on = set(on)
        return cls([[ONE if lab in on else ZERO for lab in comp]
                    for comp in labels])

    def on_labels(self, labels):
        """Labels whose node is on in at least one component, in order."""
        out = []
        for comp, labs in zip(self.components, labels):
            for v, lab in zip(comp, labs):
                if v == ONE and lab not in out:
                    out.append(lab)
        return out

    @property
    def is_binary(self):
        return all(v in _BINARY for comp in self.components for v in comp)

    def require_binary(self):
        if not self.is_binary:
            msg = "Initial states may only switch nodes on (1) or off (0)."
            logger.error(msg)
            raise ValidationError(msg)


def check_lengths(state, lengths, what):
    if state.k != len(lengths) or state.lengths != tuple(lengths):
        msg = ("{} has component lengths {} but the map expects {}."
               "".format(what, list(state.lengths), list(lengths)))
        logger.error(msg)
        raise DimensionError(msg)


def update(real, indet, initial):
    """Force 1 wherever `initial` (a pair of arrays or None) is on."""
    if initial is None:
        return real, indet
    on = initial[0] == 1
    if np.any(indet[on] != 0):
        logger.debug("Indeterminate coordinate forced on by updating.")
    real = real.copy()
    indet = indet.copy()
    real[on] = 1
    indet[on] = 0
    return real, indet


def integer_nmatrix(matrix):
    """`matrix` with int64 storage.

    Raises
    ------
    TypeError if `matrix` is not an NMatrix. ValidationError if an entry
    has a fractional part.
    """
    if not isinstance(matrix, NMatrix):
        raise TypeError("matrix must be nmaps.nmatrix.NMatrix. {} was "
                        "passed.".format(type(matrix)))
    if not is_integral(matrix):
        msg = "Map matrices must have integer entries."
        logger.error(msg)
        raise ValidationError(msg)
    if not matrix.is_fractional:
        return matrix
    return NMatrix.from_arrays(
        [matrix.real(i).astype(np.int64) for i in range(matrix.k)],
        [matrix.indet(i).astype(np.int64) for i in range(matrix.k)],
        row_labels=matrix.row_labels, col_labels=matrix.col_labels)


def default_labels(prefix, sizes):
    return [['{}{}'.format(prefix, j + 1) for j in range(n)] for n in sizes]


def labels_or_default(labels, prefix, sizes):
    """`labels` with every missing component list replaced by defaults."""
    defaults = default_labels(prefix, sizes)
    return [d if lab is None else lab for lab, d in zip(labels, defaults)]


def default_names(prefix, k):
    return ['{}{}'.format(prefix, i + 1) for i in range(k)]


class BaseMap(object):
    """Base class for map dynamical systems.

    Parameters
    ----------
    matrix : NMatrix
        One component matrix per expert or sub-model.
    names : sequence of str, optional
        Component names.
    """
    # Names of the per-component label attributes that must agree when maps
    # are combined.
    _label_attrs = ()

    def __init__(self, matrix, names=None):
        self.matrix = integer_nmatrix(matrix)
        if names is None:
            names = default_names('M', self.matrix.k)
        if len(names) != self.matrix.k:
            raise ValidationError("Expected {} component names, got {}."
                                  "".format(self.matrix.k, len(names)))
        self.names = tuple(str(n) for n in names)
        self.combined = False

    @property
    def k(self):
        return self.matrix.k

    @property
    def is_simple(self):
        """True if every entry is one of -1, 0, 1 and I."""
        for i in range(self.k):
            for row in self.matrix.component(i):
                for v in row:
                    if v.real not in (-1, 0, 1) or v.indet not in (0, 1):
                        return False
                    if v.real != 0 and v.indet != 0:
                        return False
        return True

    def check_aligned(self, other):
        """Raise AlignmentError unless `other` has the same labels.

        The message names the first label that differs.
        """
        if type(other) is not type(self) or other.k != self.k:
            msg = "Maps of different kinds or component counts."
            logger.error(msg)
            raise AlignmentError(msg)
        for attr in self._label_attrs:
            for i, (mine, theirs) in enumerate(zip(getattr(self, attr),
                                                   getattr(other, attr))):
                for j in range(max(len(mine), len(theirs))):
                    a = mine[j] if j < len(mine) else None
                    b = theirs[j] if j < len(theirs) else None
                    if a != b:
                        msg = ("Component {} diverges at {} position {}: {} "
                               "vs {}.".format(i + 1, attr.replace('_', ' '),
                                               j + 1, a, b))
                        logger.error(msg)
                        raise AlignmentError(msg)


def run_in_threads(tasks, prefix='nmaps'):
    """Run independent callables, one thread each, and collect the results.

    Parameters
    ----------
    tasks : sequence of (name, callable)
    prefix : str
        Prefix of the thread names.

    Returns
    -------
    results : list
        Results in the order of `tasks`.

    Raises
    ------
    The first exception raised by a task, after every thread has finished.
    """
    results = [None] * len(tasks)
    errors = [None] * len(tasks)

    def _target(index, func):
        try:
            results[index] = func()
        except Exception as e:  # Re-raised in the calling thread.
            errors[index] = e

    threads = []
    for index, (name, func) in enumerate(tasks):
        t = threading.Thread(target=_target, args=(index, func),
                             name='{}-{}'.format(prefix, name))
        t.daemon = True
        t.start()
        threads.append(t)
    for t in threads:
        t.join()
    for e in errors:
        if e is not None:
            raise e
    return results


def _default_weight(edge):
    if edge.weight is not None:
        return as_value(edge.weight)
    return INDET if edge.kind is EdgeKind.INDETERMINATE else ONE


def edge_weight(edge, i, weights):
    """Weight of `edge` of component `i` (0-based) for a map matrix.

    `weights` is None (the edge's own weight, else ``1``, or ``I`` for
    indeterminate edges), a callable ``weights(edge, i)``, or a dict keyed
    by ``(i, u, v)`` or ``(u, v)``.
    """
    if weights is None:
        return _default_weight(edge)
    if callable(weights):
        return as_value(weights(edge, i))
    for key in ((i, edge.u, edge.v), (edge.u, edge.v)):
        if key in weights:
            return as_value(weights[key])
    msg = "No weight given for edge {} -> {} of component {}.".format(
        edge.u, edge.v, i + 1)
    logger.error(msg)
    raise ValidationError(msg)
