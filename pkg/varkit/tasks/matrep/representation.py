# -*- coding: utf-8 -*-
# file: representation.py
# time: 2026/10/17

from varkit.tasks.exact.matrix import DenseMatrix
from varkit.tasks.exact.scalars import RATIONALS, require_same_domain
from varkit.utils.exceptions import DimensionMismatchError, DomainMismatchError


class MatrixRepresentation:
    """
    Pair (V, G) with V = K^dim and G generated by invertible matrices acting on row vectors,
    v o g = v * g. Inverses are computed once and checked by multiplication.
    """

    __slots__ = ('domain', 'dim', 'generators', 'inverses', 'labels')

    def __init__(self, domain, dim, generators=(), labels=None):
        if not domain.is_field:
            raise DomainMismatchError('Representations are defined over fields, got {}'.format(domain))
        if dim < 1:
            raise ValueError('Module dimension must be positive, got {}'.format(dim))
        generators = list(generators)
        for g in generators:
            require_same_domain(domain, g.domain)
            if g.shape != (dim, dim):
                raise DimensionMismatchError('Generator of shape {} in a representation of dimension {}'.format(
                    g.shape, dim))
        inverses = []
        identity = DenseMatrix.identity(domain, dim)
        for g in generators:
            try:
                g_inv = g.inverse()
            except ValueError:
                raise ValueError('Generator {} is not invertible'.format(g))
            if g @ g_inv != identity or g_inv @ g != identity:
                raise ValueError('Inverse check failed for generator {}'.format(g))
            inverses.append(g_inv)
        if labels is not None and len(labels) != len(generators):
            raise ValueError('Got {} labels for {} generators'.format(len(labels), len(generators)))
        self.domain = domain
        self.dim = dim
        self.generators = tuple(generators)
        self.inverses = tuple(inverses)
        self.labels = tuple(labels) if labels is not None else tuple('g{}'.format(i + 1)
                                                                     for i in range(len(generators)))

    @property
    def rank(self):
        return len(self.generators)

    def identity(self):
        return DenseMatrix.identity(self.domain, self.dim)

    def __eq__(self, other):
        return (isinstance(other, MatrixRepresentation) and self.domain == other.domain
                and self.dim == other.dim and self.generators == other.generators)

    def __hash__(self):
        return hash((self.domain, self.dim, self.generators))

    def __repr__(self):
        return 'MatrixRepresentation({}^{}, {} generators)'.format(self.domain, self.dim, self.rank)


def _coefficients(domain, values, what):
    values = [domain.coerce(x) for x in values]
    if not values:
        raise ValueError('The set of {} is empty'.format(what))
    return sorted(set(values), key=values.index)


def ut_natural(n, domain=RATIONALS, coefficients=(1,)):
    """(K^n, UT_n(K)) given by the generators I + c E_{i,i+1}."""
    if n < 1:
        raise ValueError('n must be positive, got {}'.format(n))
    coefficients = _coefficients(domain, coefficients, 'coefficients')
    identity = DenseMatrix.identity(domain, n)
    generators, labels = [], []
    for i in range(n - 1):
        for c in coefficients:
            if c == 0:
                continue
            generators.append(identity + DenseMatrix.unit(domain, n, n, i, i + 1).scale(c))
            labels.append('u{}_{}'.format(i + 1, domain.format_scalar(c)))
    return MatrixRepresentation(domain, n, generators, labels)


def t_natural(n, domain=RATIONALS, coefficients=(1,), diagonal_units=(2,)):
    """(K^n, T_n(K)): ut_natural generators plus diag(1, .., d, .., 1) for each unit d."""
    units = _coefficients(domain, diagonal_units, 'diagonal units')
    if any(d == 0 for d in units):
        raise ValueError('Diagonal units must be nonzero, got {}'.format(list(diagonal_units)))
    base = ut_natural(n, domain, coefficients)
    generators, labels = list(base.generators), list(base.labels)
    for i in range(n):
        for d in units:
            entries = [[domain.zero] * n for _ in range(n)]
            for j in range(n):
                entries[j][j] = d if j == i else domain.one
            generators.append(DenseMatrix(domain, entries))
            labels.append('d{}_{}'.format(i + 1, domain.format_scalar(d)))
    return MatrixRepresentation(domain, n, generators, labels)


def units_of_scalar_plus_nilpotent(n, domain=RATIONALS, scalar=2):
    """ut_natural generators plus scalar * I, inside {a I + strictly upper : a != 0}."""
    scalar = domain.coerce(scalar)
    if scalar in (domain.zero, domain.one):
        raise ValueError('The scalar generator must differ from 0 and 1, got {}'.format(scalar))
    base = ut_natural(n, domain)
    return MatrixRepresentation(domain, n, list(base.generators) + [DenseMatrix.scalar(domain, n, scalar)],
                                list(base.labels) + ['s_{}'.format(domain.format_scalar(scalar))])


def permutation_matrix(domain, degree, images):
    """Matrix of the permutation i -> images[i] (0-based) under the right action e_i * P = e_images[i]."""
    return DenseMatrix(domain, [[domain.one if images[i] == j else domain.zero for j in range(degree)]
                                for i in range(degree)])


def permutation_representation(degree, permutations, domain=RATIONALS, labels=None):
    """Permutation matrices of `permutations`, each a 0-based image list of length `degree`."""
    generators = []
    for images in permutations:
        images = list(images)
        if sorted(images) != list(range(degree)):
            raise ValueError('{} is not a permutation of 0..{}'.format(images, degree - 1))
        generators.append(permutation_matrix(domain, degree, images))
    return MatrixRepresentation(domain, degree, generators, labels)


def full_hom_basis(domain, m1, m2):
    return [DenseMatrix.unit(domain, m1, m2, i, j) for i in range(m1) for j in range(m2)]


def triangular_product(rep1, rep2, hom_basis=None):
    """
    Block upper triangular product: generators diag(g1, I), diag(I, g2) and [[I, phi], [0, I]].
    Under the right row action the last dim(rep2) coordinates form the submodule V2 and rep1
    acts on the quotient V / V2.
    """
    domain = require_same_domain(rep1.domain, rep2.domain)
    m1, m2 = rep1.dim, rep2.dim
    if hom_basis is None:
        hom_basis = full_hom_basis(domain, m1, m2)
    id1, id2 = DenseMatrix.identity(domain, m1), DenseMatrix.identity(domain, m2)
    corner_zero = DenseMatrix.zero(domain, m1, m2)
    generators, labels = [], []
    for g, label in zip(rep1.generators, rep1.labels):
        generators.append(DenseMatrix.block_upper(g, corner_zero, id2))
        labels.append('L.{}'.format(label))
    for g, label in zip(rep2.generators, rep2.labels):
        generators.append(DenseMatrix.block_upper(id1, corner_zero, g))
        labels.append('R.{}'.format(label))
    for index, phi in enumerate(hom_basis):
        require_same_domain(domain, phi.domain)
        if phi.shape != (m1, m2):
            raise DimensionMismatchError('Hom basis element of shape {}, expected {}'.format(phi.shape, (m1, m2)))
        if phi.is_zero():
            continue
        generators.append(DenseMatrix.block_upper(id1, phi, id2))
        labels.append('H{}'.format(index + 1))
    return MatrixRepresentation(domain, m1 + m2, generators, labels)


def is_invariant_block(rep, start, stop):
    """True when the coordinates start..stop-1 span a G-invariant subspace of V."""
    for g in rep.generators:
        for r in range(start, stop):
            row = g.entries[r]
            if any(row[c] != 0 for c in range(g.cols) if not start <= c < stop):
                return False
    return True


def restrict_block(rep, start, stop):
    """Subrepresentation on the invariant coordinate block start..stop-1."""
    if not 0 <= start < stop <= rep.dim:
        raise ValueError('Block {}..{} is outside 0..{}'.format(start, stop, rep.dim))
    if not is_invariant_block(rep, start, stop):
        raise ValueError('Coordinates {}..{} are not invariant'.format(start, stop - 1))
    return MatrixRepresentation(rep.domain, stop - start,
                                [g.submatrix(start, stop, start, stop) for g in rep.generators], rep.labels)
