"""n-matrices: ordered unions of k matrices over neutrosophic values.

A bimatrix is an n-matrix with k = 2, a trimatrix one with k = 3. Every
operation acts componentwise. Each component is stored as two numpy arrays,
the real parts and the coefficients of I.
"""
from __future__ import division, print_function, absolute_import
from collections import namedtuple
import enum
from fractions import Fraction
from itertools import combinations

import numpy as np

from nmaps.errors import DimensionError, ValidationError
from nmaps.neutro import NeutroValue, as_value, format_value, parse_value
from nmaps.utils import INT_BOUND, UNION, logger


class MatrixShape(enum.Enum):
    SQUARE = 'Square'
    MIXED_SQUARE = 'MixedSquare'
    RECTANGULAR = 'Rectangular'
    MIXED_RECTANGULAR = 'MixedRectangular'


class MatrixContent(enum.Enum):
    REAL = 'Real'
    FUZZY = 'Fuzzy'
    SEMI_FUZZY = 'SemiFuzzy'
    NEUTROSOPHIC = 'Neutrosophic'
    SEMI_NEUTROSOPHIC = 'SemiNeutrosophic'
    FUZZY_NEUTROSOPHIC = 'FuzzyNeutrosophic'
    SEMI_FUZZY_NEUTROSOPHIC = 'SemiFuzzyNeutrosophic'


NMatrixKind = namedtuple('NMatrixKind', ['shape', 'content'])


def _as_array(values, fractional):
    if fractional:
        return np.array(values, dtype=object)
    # Python ints outside int64 raise OverflowError here.
    return np.array(values, dtype=np.int64)


def _freeze(arr):
    arr.flags.writeable = False
    return arr


def _component_arrays(rows, allow_empty=False):
    """Split a 2-D sequence of values into (real, indet) arrays."""
    if isinstance(rows, np.ndarray):
        rows = rows.tolist()
    values = [[as_value(x) for x in row] for row in rows]
    n_rows = len(values)
    n_cols = len(values[0]) if n_rows else 0
    if any(len(row) != n_cols for row in values):
        raise DimensionError("Rows of a component have different lengths.")
    if n_rows == 0 or (n_cols == 0 and not allow_empty):
        raise ValidationError("Every component must be non-empty.")
    fractional = any(v.is_fractional for row in values for v in row)
    if n_cols == 0:
        dtype = object if fractional else np.int64
        return np.zeros((n_rows, 0), dtype=dtype), np.zeros((n_rows, 0),
                                                            dtype=dtype)
    real = _as_array([[v.real for v in row] for row in values], fractional)
    indet = _as_array([[v.indet for v in row] for row in values], fractional)
    return real, indet


def _is_object(arr):
    return arr.dtype == object


def _max_abs(arr):
    if arr.size == 0:
        return 0
    return int(np.max(np.abs(arr)))


def _check_product_bound(*factors):
    bound = 1
    for f in factors:
        bound *= max(int(f), 1)
    if bound >= INT_BOUND:
        msg = "Product could overflow the int64 representation."
        logger.error(msg)
        raise OverflowError(msg)


def _labels(labels, k, sizes, what):
    if labels is None:
        return tuple(None for _ in range(k))
    if len(labels) != k:
        raise DimensionError("Expected {} {} label lists, got {}."
                             "".format(k, what, len(labels)))
    out = []
    for i, (lab, size) in enumerate(zip(labels, sizes)):
        if lab is None:
            out.append(None)
            continue
        lab = tuple(str(x) for x in lab)
        if len(lab) != size:
            raise DimensionError("Component {} has {} {}s but {} {} labels."
                                 "".format(i + 1, size, what, len(lab), what))
        out.append(lab)
    return tuple(out)


class NMatrix(object):
    """An ordered union ``A_1 ∪ A_2 ∪ ... ∪ A_k`` of matrices.

    Parameters
    ----------
    components : sequence of 2-D sequences
        Entries may be ints, token strings such as ``'I'`` or ``'2+I'``, or
        NeutroValue instances.
    row_labels, col_labels : sequence of (sequence of str or None), optional
        Labels of each component's rows and columns.
    allow_empty : bool (defaults to False)
        Allow components with zero columns, as produced by incidence matrices
        of edgeless graphs.
    """
    def __init__(self, components, row_labels=None, col_labels=None,
                 allow_empty=False):
        components = list(components)
        if not components:
            msg = "An n-matrix needs at least one component."
            logger.error(msg)
            raise ValidationError(msg)
        reals, indets = [], []
        for i, rows in enumerate(components):
            try:
                real, indet = _component_arrays(rows, allow_empty=allow_empty)
            except (DimensionError, ValidationError) as e:
                msg = "Component {}: {}".format(i + 1, e)
                logger.error(msg)
                raise type(e)(msg)
            reals.append(real)
            indets.append(indet)
        self._init_from_arrays(reals, indets, row_labels, col_labels)

    @classmethod
    def from_arrays(cls, reals, indets, row_labels=None, col_labels=None):
        """Build from lists of real-part and I-coefficient arrays."""
        obj = cls.__new__(cls)
        reals = [np.array(r, dtype=r.dtype if _is_object(r) else np.int64)
                 for r in reals]
        indets = [np.array(d, dtype=d.dtype if _is_object(d) else np.int64)
                  for d in indets]
        obj._init_from_arrays(reals, indets, row_labels, col_labels)
        return obj

    def _init_from_arrays(self, reals, indets, row_labels, col_labels):
        self._real = tuple(_freeze(r) for r in reals)
        self._indet = tuple(_freeze(d) for d in indets)
        self.row_labels = _labels(row_labels, self.k,
                                  [r.shape[0] for r in self._real], 'row')
        self.col_labels = _labels(col_labels, self.k,
                                  [r.shape[1] for r in self._real], 'column')
        self._warn_if_not_distinct()

    def _warn_if_not_distinct(self):
        if self.k < 2 or self.is_zero:
            return
        for i, j in combinations(range(self.k), 2):
            if (self._real[i].shape == self._real[j].shape
                    and np.array_equal(self._real[i], self._real[j])
                    and np.array_equal(self._indet[i], self._indet[j])):
                logger.warning("Components {} and {} are identical; this is "
                               "not an n-matrix in the strict sense."
                               "".format(i + 1, j + 1))

    @property
    def k(self):
        return len(self._real)

    @property
    def shapes(self):
        return tuple(r.shape for r in self._real)

    @property
    def is_zero(self):
        return all(not np.any(r) and not np.any(d)
                   for r, d in zip(self._real, self._indet))

    @property
    def is_fractional(self):
        return any(_is_object(r) or _is_object(d)
                   for r, d in zip(self._real, self._indet))

    @property
    def has_indeterminacy(self):
        return any(np.any(d != 0) for d in self._indet)

    def real(self, i):
        """Real parts of component `i` (0-based), read-only."""
        return self._real[i]

    def indet(self, i):
        """Coefficients of I of component `i` (0-based), read-only."""
        return self._indet[i]

    def component(self, i):
        """Component `i` (0-based) as a list of rows of NeutroValue."""
        return [[NeutroValue(r, d) for r, d in zip(rrow, drow)]
                for rrow, drow in zip(self._real[i].tolist(),
                                      self._indet[i].tolist())]

    def entry(self, i, row, col):
        return NeutroValue(self._real[i][row, col].item()
                           if not _is_object(self._real[i])
                           else self._real[i][row, col],
                           self._indet[i][row, col].item()
                           if not _is_object(self._indet[i])
                           else self._indet[i][row, col])

    def __eq__(self, other):
        if not isinstance(other, NMatrix):
            return NotImplemented
        return nm_equal(self, other)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "NMatrix(k={}, shapes={})".format(self.k, list(self.shapes))

    def __str__(self):
        return format_nmatrix(self)


class NVector(object):
    """An ordered union of row vectors over neutrosophic values.

    Parameters
    ----------
    components : sequence of sequences
        One row vector per component.
    """
    def __init__(self, components):
        self.components = tuple(tuple(as_value(x) for x in comp)
                                for comp in components)
        if not self.components:
            raise ValidationError("A vector needs at least one component.")

    @classmethod
    def from_arrays(cls, reals, indets):
        return cls([[NeutroValue(int(r), int(d)) for r, d in zip(rr, dd)]
                    for rr, dd in zip(reals, indets)])

    @property
    def k(self):
        return len(self.components)

    @property
    def lengths(self):
        return tuple(len(c) for c in self.components)

    def arrays(self, i):
        """(real, indet) int64 arrays of component `i` (0-based)."""
        comp = self.components[i]
        real = np.array([v.real for v in comp], dtype=np.int64)
        indet = np.array([v.indet for v in comp], dtype=np.int64)
        return real, indet

    def __getitem__(self, i):
        return self.components[i]

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        if not isinstance(other, NVector):
            return NotImplemented
        return self.components == other.components

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "{}('{}')".format(type(self).__name__, str(self))

    def __str__(self):
        return format_vector(self)


def format_component(values):
    """Render one row vector as ``(1 0 I)``."""
    return '(' + ' '.join(format_value(v) for v in values) + ')'


def format_vector(v):
    """Render an n-vector as ``(1 0) ∪ (0 I 1)``."""
    return ' {} '.format(UNION).join(format_component(c) for c in v)


def as_nvector(v):
    if isinstance(v, NVector):
        return v
    return NVector(v)


def nm_equal(a, b):
    """Return True if `a` and `b` have the same components in the same order.

    Labels are not compared.
    """
    if a.k != b.k or a.shapes != b.shapes:
        return False
    for i in range(a.k):
        if not (np.array_equal(a.real(i), b.real(i))
                and np.array_equal(a.indet(i), b.indet(i))):
            return False
    return True


def nm_component(a, i):
    """Component `i` (0-based) of `a` as rows of NeutroValue."""
    if not 0 <= i < a.k:
        msg = "Component index {} out of range for k = {}.".format(i, a.k)
        logger.error(msg)
        raise DimensionError(msg)
    return a.component(i)


def nm_zeros(shapes, row_labels=None, col_labels=None):
    """Zero n-matrix with the given component shapes."""
    return NMatrix.from_arrays(
        [np.zeros(s, dtype=np.int64) for s in shapes],
        [np.zeros(s, dtype=np.int64) for s in shapes],
        row_labels=row_labels, col_labels=col_labels)


def nm_scalar_mul(lam, a):
    """Multiply every entry of every component by the scalar `lam`."""
    lam = as_value(lam)
    c, d = lam
    reals, indets = [], []
    for i in range(a.k):
        real, indet = a.real(i), a.indet(i)
        if lam.is_fractional or _is_object(real) or _is_object(indet):
            real, indet = real.astype(object), indet.astype(object)
        else:
            _check_product_bound(3, abs(c) + abs(d),
                                 max(_max_abs(real), _max_abs(indet)))
        reals.append(c * real)
        indets.append(d * real + c * indet + d * indet)
    return NMatrix.from_arrays(reals, indets, a.row_labels, a.col_labels)


def nm_negate(a):
    return nm_scalar_mul(-1, a)


def _check_same_shapes(a, b, op):
    if a.k != b.k:
        msg = ("Cannot {} n-matrices with {} and {} components."
               "".format(op, a.k, b.k))
        logger.error(msg)
        raise DimensionError(msg)
    for i, (sa, sb) in enumerate(zip(a.shapes, b.shapes)):
        if sa != sb:
            msg = ("Cannot {}: component {} has shape {}x{} in one operand "
                   "and {}x{} in the other.".format(op, i + 1, sa[0], sa[1],
                                                    sb[0], sb[1]))
            logger.error(msg)
            raise DimensionError(msg)


def nm_add(a, b):
    """Entrywise sum of two n-matrices with identical component shapes.

    Raises
    ------
    DimensionError naming the first component whose shapes differ.
    """
    _check_same_shapes(a, b, 'add')
    reals, indets = [], []
    for i in range(a.k):
        ar, ad, br, bd = a.real(i), a.indet(i), b.real(i), b.indet(i)
        if any(_is_object(x) for x in (ar, ad, br, bd)):
            ar, ad = ar.astype(object), ad.astype(object)
            br, bd = br.astype(object), bd.astype(object)
        else:
            _check_product_bound(2, max(_max_abs(ar), _max_abs(ad),
                                        _max_abs(br), _max_abs(bd)))
        reals.append(ar + br)
        indets.append(ad + bd)
    return NMatrix.from_arrays(reals, indets, a.row_labels, a.col_labels)


def vec_mul_arrays(vr, vi, mr, mi):
    """Raw product of one row vector with one matrix, both split in parts.

    ``(vr + vi I)(mr + mi I) = vr mr + (vr mi + vi mr + vi mi) I``.
    """
    n = max(vr.shape[0], 1)
    _check_product_bound(3, n, max(_max_abs(vr), _max_abs(vi)),
                         max(_max_abs(mr), _max_abs(mi)))
    real = vr.dot(mr)
    indet = vr.dot(mi) + vi.dot(mr) + vi.dot(mi)
    return real, indet


def nm_vec_mul(v, a):
    """Raw, unthresholded product ``v_1 A_1 ∪ ... ∪ v_k A_k``.

    Parameters
    ----------
    v : NVector or sequence of sequences
        Component i must have as many entries as A_i has rows.
    a : NMatrix
        Must hold integer entries.

    Returns
    -------
    product : NVector

    Raises
    ------
    DimensionError if the number of components or any length does not match.
    """
    v = as_nvector(v)
    if v.k != a.k:
        msg = ("Vector has {} components but the n-matrix has {}."
               "".format(v.k, a.k))
        logger.error(msg)
        raise DimensionError(msg)
    if not is_integral(a):
        raise ValidationError("Products are only defined for integer "
                              "n-matrices.")
    reals, indets = [], []
    for i in range(a.k):
        if len(v[i]) != a.shapes[i][0]:
            msg = ("Component {} of the vector has length {} but the matrix "
                   "has {} rows.".format(i + 1, len(v[i]), a.shapes[i][0]))
            logger.error(msg)
            raise DimensionError(msg)
        vr, vi = v.arrays(i)
        real, indet = vec_mul_arrays(vr, vi, a.real(i), a.indet(i))
        reals.append(real)
        indets.append(indet)
    return NVector.from_arrays(reals, indets)


def nm_transpose(a):
    """Transpose every component; row and column labels swap."""
    return NMatrix.from_arrays([r.T for r in a._real],
                               [d.T for d in a._indet],
                               row_labels=a.col_labels,
                               col_labels=a.row_labels)


def _is_fuzzy_entry(r, d):
    return d == 0 and 0 <= r <= 1


def _is_fuzzy_neutrosophic_entry(r, d):
    return 0 <= r <= 1 and 0 <= d <= 1


def nm_classify(a):
    """Shape and content kind of an n-matrix.

    A component is neutrosophic if some entry has a non-zero I part, fuzzy if
    every entry is a real in [0, 1], and fuzzy neutrosophic if it is
    neutrosophic and both parts of every entry lie in [0, 1]. Fuzzy
    neutrosophic takes precedence over neutrosophic, which takes precedence
    over fuzzy; the ``Semi`` kinds apply when some but not all components
    qualify.

    Returns
    -------
    kind : NMatrixKind
    """
    shapes = a.shapes
    square = all(r == c for r, c in shapes)
    same = len(set(shapes)) == 1
    if square and same:
        shape = MatrixShape.SQUARE
    elif square:
        shape = MatrixShape.MIXED_SQUARE
    elif same:
        shape = MatrixShape.RECTANGULAR
    else:
        shape = MatrixShape.MIXED_RECTANGULAR

    neutro, fuzzy, fuzzy_neutro = [], [], []
    for i in range(a.k):
        pairs = list(zip(a.real(i).ravel().tolist(),
                         a.indet(i).ravel().tolist()))
        has_i = any(d != 0 for _, d in pairs)
        neutro.append(has_i)
        fuzzy.append(all(_is_fuzzy_entry(r, d) for r, d in pairs))
        fuzzy_neutro.append(has_i and all(_is_fuzzy_neutrosophic_entry(r, d)
                                          for r, d in pairs))

    if all(fuzzy_neutro):
        content = MatrixContent.FUZZY_NEUTROSOPHIC
    elif any(fuzzy_neutro):
        content = MatrixContent.SEMI_FUZZY_NEUTROSOPHIC
    elif all(neutro):
        content = MatrixContent.NEUTROSOPHIC
    elif any(neutro):
        content = MatrixContent.SEMI_NEUTROSOPHIC
    elif all(fuzzy):
        content = MatrixContent.FUZZY
    elif any(fuzzy):
        content = MatrixContent.SEMI_FUZZY
    else:
        content = MatrixContent.REAL
    return NMatrixKind(shape, content)


def format_nmatrix(a, with_labels=False):
    """Matrix-literal text: rows of tokens, ``---`` between components.

    With `with_labels`, each component starts with a ``#`` line listing its
    column labels and every row is prefixed with its row label.
    """
    blocks = []
    for i in range(a.k):
        lines = []
        rows = a.component(i)
        row_labels = a.row_labels[i]
        if with_labels and a.col_labels[i] is not None:
            lines.append('# ' + ' '.join(a.col_labels[i]))
        for j, row in enumerate(rows):
            text = ' '.join(format_value(v) for v in row)
            if with_labels and row_labels is not None:
                text = '{}: {}'.format(row_labels[j], text)
            lines.append(text)
        blocks.append('\n'.join(lines))
    return '\n---\n'.join(blocks) + '\n'


def parse_nmatrix(text):
    """Inverse of :func:`format_nmatrix` without labels.

    Blank lines and ``#`` comments are skipped.

    Raises
    ------
    ValidationError on malformed tokens, DimensionError on ragged rows.
    """
    components, current = [], []
    for line in text.splitlines():
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if line == '---':
            components.append(current)
            current = []
            continue
        current.append([parse_value(tok) for tok in line.split()])
    components.append(current)
    return NMatrix(components)


def is_integral(a):
    """True if no entry of `a` carries a fractional part."""
    if not a.is_fractional:
        return True
    for i in range(a.k):
        for x in np.concatenate([a.real(i).ravel(), a.indet(i).ravel()]):
            if isinstance(x, Fraction) and x.denominator != 1:
                return False
    return True
