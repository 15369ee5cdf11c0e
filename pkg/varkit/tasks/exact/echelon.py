# -*- coding: utf-8 -*-
# file: echelon.py
# time: 2026/10/17

from varkit.tasks.exact.matrix import DenseMatrix
from varkit.tasks.exact.scalars import require_same_domain
from varkit.utils.exceptions import DimensionMismatchError, DomainMismatchError
from varkit.utils.varkit_utils import check_cap, resolve_config


class Subspace:
    """
    Row space (over a field) or lattice (over Z) inside domain^ambient.

    The basis is canonical: reduced row-echelon form over fields, row-style Hermite normal form
    over Z (positive pivots, entries above a pivot reduced into [0, pivot)). Two Subspaces are
    equal exactly when they describe the same space.
    """

    __slots__ = ('domain', 'ambient', 'basis', '_pivots')

    def __init__(self, domain, ambient, basis):
        self.domain = domain
        self.ambient = ambient
        self.basis = tuple(tuple(row) for row in basis)
        self._pivots = {}
        for index, row in enumerate(self.basis):
            self._pivots[next(j for j, x in enumerate(row) if x != 0)] = index

    @property
    def rank(self):
        return len(self.basis)

    @property
    def pivots(self):
        return sorted(self._pivots)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        # over Z a full-rank lattice can still be a proper sublattice
        return self.domain.is_field and self.rank == self.ambient

    def basis_matrix(self):
        return DenseMatrix(self.domain, self.basis, self.ambient)

    def __contains__(self, vector):
        return member(vector, self)

    def contains(self, other):
        require_same_domain(self.domain, other.domain)
        return all(member(row, self) for row in other.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.domain == other.domain
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.domain, self.ambient, self.basis))

    def __repr__(self):
        return 'Subspace({}^{}, rank={})'.format(self.domain, self.ambient, self.rank)


class SpanBuilder:
    """Incrementally reduced spanning set; `subspace()` returns the canonical form."""

    def __init__(self, domain, ambient, config=None):
        config = resolve_config(config)
        check_cap('ambient dimension', ambient, config.max_ambient_dimension)
        self.domain = domain
        self.ambient = ambient
        self._rows = {}  # pivot column -> row

    @property
    def rank(self):
        return len(self._rows)

    def _coerce(self, vector):
        if len(vector) != self.ambient:
            raise DimensionMismatchError('Vector of length {} in ambient dimension {}'.format(
                len(vector), self.ambient))
        return [self.domain.coerce(x) for x in vector]

    def add(self, vector):
        """Insert a vector; returns True when the rank grew."""
        vec = self._coerce(vector)
        if self.domain.is_field:
            return self._add_over_field(vec)
        return self._add_over_integers(vec)

    def extend(self, vectors):
        grew = False
        for vector in vectors:
            grew = self.add(vector) or grew
        return grew

    def _add_over_field(self, vec):
        domain = self.domain
        rows = self._rows
        for j in range(self.ambient):
            if vec[j] == 0:
                continue
            row = rows.get(j)
            if row is None:
                factor = domain.inv(vec[j])
                rows[j] = [domain.mul(factor, x) for x in vec]
                return True
            factor = vec[j]
            for c in range(j, self.ambient):
                if row[c] != 0:
                    vec[c] = domain.sub(vec[c], domain.mul(factor, row[c]))
        return False

    def _add_over_integers(self, vec):
        rows = self._rows
        n = self.ambient
        for j in range(n):
            if vec[j] == 0:
                continue
            row = rows.get(j)
            if row is None:
                rows[j] = vec
                return True
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                for c in range(j, n):
                    vec[c] -= q * row[c]
            elif a % b == 0:
                rows[j], vec = vec, row
                row = rows[j]
                q = a // b
                for c in range(j, n):
                    vec[c] -= q * row[c]
            else:
                x, y, g = xgcd(a, b)
                ag, mbg = a // g, -b // g
                new_row = row[:]
                for c in range(j, n):
                    new_row[c] = x * row[c] + y * vec[c]
                    vec[c] = mbg * row[c] + ag * vec[c]
                rows[j] = new_row
        return False

    def subspace(self):
        domain = self.domain
        order = sorted(self._rows)
        rows = [list(self._rows[j]) for j in order]
        if domain.is_field:
            for i, p in enumerate(order):
                for k in range(i):
                    factor = rows[k][p]
                    if factor != 0:
                        rows[k] = [domain.sub(x, domain.mul(factor, y)) for x, y in zip(rows[k], rows[i])]
        else:
            for i, p in enumerate(order):
                if rows[i][p] < 0:
                    rows[i] = [-x for x in rows[i]]
                for k in range(i):
                    q = rows[k][p] // rows[i][p]
                    if q:
                        rows[k] = [x - q * y for x, y in zip(rows[k], rows[i])]
        return Subspace(domain, self.ambient, rows)


def xgcd(a, b):
    # Maintain the invariants:
    #          x * a +      y * b ==      g
    #     next_x * a + next_y * b == next_g
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


def span(domain, ambient, vectors, config=None):
    builder = SpanBuilder(domain, ambient, config)
    builder.extend(vectors)
    return builder.subspace()


def rref(m, config=None):
    if not m.domain.is_field:
        raise DomainMismatchError('rref needs a field, got {}; use hnf over Z'.format(m.domain))
    return span(m.domain, m.cols, m.entries, config)


def hnf(m, config=None):
    if m.domain.is_field:
        raise DomainMismatchError('hnf works over Z, got {}'.format(m.domain))
    return span(m.domain, m.cols, m.entries, config)


def row_space(m, config=None):
    return span(m.domain, m.cols, m.entries, config)


def member(vector, subspace):
    if len(vector) != subspace.ambient:
        raise DimensionMismatchError('Vector of length {} in ambient dimension {}'.format(
            len(vector), subspace.ambient))
    domain = subspace.domain
    vec = [domain.coerce(x) for x in vector]
    pivots = subspace._pivots
    for j in range(subspace.ambient):
        if vec[j] == 0:
            continue
        index = pivots.get(j)
        if index is None:
            return False
        row = subspace.basis[index]
        if domain.is_field:
            q = domain.div(vec[j], row[j])
        else:
            if vec[j] % row[j]:
                return False
            q = vec[j] // row[j]
        for c in range(j, subspace.ambient):
            if row[c] != 0:
                vec[c] = domain.sub(vec[c], domain.mul(q, row[c]))
    return True


def nullspace(m, config=None):
    """Canonical basis of {x : m x = 0} over a field."""
    domain = m.domain
    if not domain.is_field:
        raise DomainMismatchError('nullspace needs a field, got {}'.format(domain))
    reduced = rref(m, config)
    pivot_rows = {p: reduced.basis[i] for i, p in enumerate(reduced.pivots)}
    vectors = []
    for free in range(m.cols):
        if free in pivot_rows:
            continue
        x = [domain.zero] * m.cols
        x[free] = domain.one
        for p, row in pivot_rows.items():
            x[p] = domain.neg(row[free])
        vectors.append(x)
    return span(domain, m.cols, vectors, config)


def left_nullspace_of_rows(domain, rows, n_vectors, config=None):
    """
    Coefficient vectors c (length n_vectors) with sum_i c_i * rows_i = 0, where `rows` yields the
    columns of that linear system one constraint at a time: each constraint is a length-n_vectors
    vector of the i-th coordinates. Constraints are reduced incrementally and the loop stops as
    soon as only the zero solution is left.
    """
    builder = SpanBuilder(domain, n_vectors, config)
    for constraint in rows:
        builder.add(constraint)
        if builder.rank == n_vectors:
            break
    constraints = builder.subspace()
    if constraints.is_zero():
        return span(domain, n_vectors, [[domain.one if i == j else domain.zero for j in range(n_vectors)]
                                        for i in range(n_vectors)], config)
    return nullspace(constraints.basis_matrix(), config)
