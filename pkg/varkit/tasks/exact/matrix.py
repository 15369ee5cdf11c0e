# -*- coding: utf-8 -*-
# file: matrix.py
# time: 2026/10/17

from varkit.tasks.exact.scalars import require_same_domain
from varkit.utils.exceptions import DimensionMismatchError


class DenseMatrix:
    """Immutable rows x cols matrix whose entries are scalars of one Domain."""

    __slots__ = ('domain', 'rows', 'cols', 'entries', '_hash')

    def __init__(self, domain, entries, cols=None):
        entries = tuple(tuple(domain.coerce(x) for x in row) for row in entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(row) != cols for row in entries):
            raise DimensionMismatchError('Ragged matrix rows, expected {} columns'.format(cols))
        self.domain = domain
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries
        self._hash = None

    @classmethod
    def _trusted(cls, domain, entries, cols):
        # entries are already coerced tuples
        m = object.__new__(cls)
        m.domain = domain
        m.rows = len(entries)
        m.cols = cols
        m.entries = entries
        m._hash = None
        return m

    @classmethod
    def zero(cls, domain, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._trusted(domain, tuple((domain.zero,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, domain, n):
        zero, one = domain.zero, domain.one
        return cls._trusted(domain, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), n)

    @classmethod
    def unit(cls, domain, rows, cols, i, j):
        """Matrix unit with a single 1 at (i, j), 0-based."""
        zero, one = domain.zero, domain.one
        return cls._trusted(domain, tuple(tuple(one if (r, c) == (i, j) else zero for c in range(cols))
                                          for r in range(rows)), cols)

    @classmethod
    def scalar(cls, domain, n, value):
        return cls.identity(domain, n).scale(value)

    @classmethod
    def from_flat(cls, domain, rows, cols, vector):
        if len(vector) != rows * cols:
            raise DimensionMismatchError('{} entries cannot fill a {}x{} matrix'.format(len(vector), rows, cols))
        return cls(domain, [vector[r * cols:(r + 1) * cols] for r in range(rows)], cols)

    @classmethod
    def block_upper(cls, top_left, corner, bottom_right):
        """[[A, B], [0, C]] for square A (m1 x m1), C (m2 x m2) and B (m1 x m2)."""
        domain = require_same_domain(top_left.domain, corner.domain, bottom_right.domain)
        m1, m2 = top_left.rows, bottom_right.rows
        if top_left.cols != m1 or bottom_right.cols != m2 or (corner.rows, corner.cols) != (m1, m2):
            raise DimensionMismatchError('Blocks of shapes {}, {}, {} do not fit'.format(
                top_left.shape, corner.shape, bottom_right.shape))
        zero_row = (domain.zero,) * m1
        entries = tuple(top_left.entries[i] + corner.entries[i] for i in range(m1)) + \
                  tuple(zero_row + bottom_right.entries[i] for i in range(m2))
        return cls._trusted(domain, entries, m1 + m2)

    @classmethod
    def block_diagonal(cls, first, second):
        return cls.block_upper(first, cls.zero(first.domain, first.rows, second.cols), second)

    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def is_square(self):
        return self.rows == self.cols

    def flatten(self):
        return tuple(x for row in self.entries for x in row)

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def submatrix(self, row_start, row_stop, col_start, col_stop):
        return DenseMatrix._trusted(self.domain, tuple(row[col_start:col_stop]
                                                       for row in self.entries[row_start:row_stop]),
                                    col_stop - col_start)

    def transpose(self):
        return DenseMatrix._trusted(self.domain, tuple(zip(*self.entries)) if self.rows else (), self.rows)

    def is_zero(self):
        zero = self.domain.zero
        return all(x == zero for row in self.entries for x in row)

    def is_identity(self):
        return self.is_square and self == DenseMatrix.identity(self.domain, self.rows)

    def _check_shape(self, other):
        require_same_domain(self.domain, other.domain)
        if self.shape != other.shape:
            raise DimensionMismatchError('Shapes {} and {} differ'.format(self.shape, other.shape))

    def __add__(self, other):
        self._check_shape(other)
        add = self.domain.add
        return DenseMatrix._trusted(self.domain, tuple(tuple(add(a, b) for a, b in zip(r, s))
                                                       for r, s in zip(self.entries, other.entries)), self.cols)

    def __sub__(self, other):
        self._check_shape(other)
        sub = self.domain.sub
        return DenseMatrix._trusted(self.domain, tuple(tuple(sub(a, b) for a, b in zip(r, s))
                                                       for r, s in zip(self.entries, other.entries)), self.cols)

    def __neg__(self):
        neg = self.domain.neg
        return DenseMatrix._trusted(self.domain, tuple(tuple(neg(a) for a in r) for r in self.entries), self.cols)

    def scale(self, value):
        value = self.domain.coerce(value)
        mul = self.domain.mul
        return DenseMatrix._trusted(self.domain, tuple(tuple(mul(value, a) for a in r) for r in self.entries),
                                    self.cols)

    def __matmul__(self, other):
        require_same_domain(self.domain, other.domain)
        if self.cols != other.rows:
            raise DimensionMismatchError('Cannot multiply {} by {}'.format(self.shape, other.shape))
        zero = self.domain.zero
        columns = list(zip(*other.entries)) if other.rows else [()] * other.cols
        if self.domain.kind == 'F':
            p = self.domain.p
            entries = tuple(tuple(sum(a * b for a, b in zip(row, col)) % p for col in columns)
                            for row in self.entries)
        else:
            entries = tuple(tuple(sum((a * b for a, b in zip(row, col)), zero) for col in columns)
                            for row in self.entries)
        return DenseMatrix._trusted(self.domain, entries, other.cols)

    def act(self, vector):
        """Right action v -> v * self on a row vector."""
        if len(vector) != self.rows:
            raise DimensionMismatchError('Vector of length {} cannot act on {}'.format(len(vector), self.shape))
        row = DenseMatrix(self.domain, [vector], self.rows)
        return (row @ self).entries[0]

    def power(self, exponent):
        if exponent < 0:
            return self.inverse().power(-exponent)
        result, base = DenseMatrix.identity(self.domain, self.rows), self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def inverse(self):
        """Gauss-Jordan inverse over a field; ValueError when singular."""
        domain = self.domain
        if not self.is_square:
            raise DimensionMismatchError('Only square matrices are invertible, got {}'.format(self.shape))
        n = self.rows
        if not domain.is_field:
            # over Z: invert over Q, accept only integral inverses
            from varkit.tasks.exact.scalars import RATIONALS
            inverse = DenseMatrix(RATIONALS, self.entries).inverse()
            if any(x.denominator != 1 for x in inverse.flatten()):
                raise ValueError('Matrix is not invertible over Z')
            return DenseMatrix(domain, inverse.entries)
        work = [list(row) + [domain.one if i == j else domain.zero for j in range(n)]
                for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                raise ValueError('Matrix is singular over {}'.format(domain))
            work[col], work[pivot] = work[pivot], work[col]
            factor = domain.inv(work[col][col])
            work[col] = [domain.mul(factor, x) for x in work[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    f = work[r][col]
                    work[r] = [domain.sub(x, domain.mul(f, y)) for x, y in zip(work[r], work[col])]
        return DenseMatrix._trusted(domain, tuple(tuple(row[n:]) for row in work), n)

    def __eq__(self, other):
        return (isinstance(other, DenseMatrix) and self.domain == other.domain
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.domain, self.cols, self.entries))
        return self._hash

    def format(self):
        fmt = self.domain.format_scalar
        return '; '.join(' '.join(fmt(x) for x in row) for row in self.entries)

    def __str__(self):
        return '[{}]'.format(self.format())

    def __repr__(self):
        return 'DenseMatrix({}, {})'.format(self.domain, self.format())
