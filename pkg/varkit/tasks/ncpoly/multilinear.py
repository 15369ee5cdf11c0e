# -*- coding: utf-8 -*-
# file: multilinear.py
# time: 2026/10/17

import logging
from functools import lru_cache
from itertools import combinations, permutations, product

from varkit.tasks.exact.echelon import SpanBuilder, left_nullspace_of_rows, member
from varkit.tasks.exact.scalars import RATIONALS, require_same_domain
from varkit.tasks.ncpoly.polynomial import NCPolynomial
from varkit.utils.exceptions import DimensionMismatchError, DomainMismatchError
from varkit.utils.varkit_utils import check_cap, progress, resolve_config

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def multilinear_monomials(n):
    """Monomials x_sigma(1)...x_sigma(n) of P_n in lexicographic order of sigma."""
    return tuple(permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def monomial_index(n):
    return {monomial: index for index, monomial in enumerate(multilinear_monomials(n))}


def to_vector(f, n):
    """Coordinates of a multilinear polynomial in x1..xn inside P_n."""
    if not f.is_multilinear() or (f.terms and f.variables() != list(range(1, n + 1))):
        raise ValueError('{} is not a multilinear polynomial in x1..x{}'.format(f, n))
    index = monomial_index(n)
    vector = [f.domain.zero] * len(index)
    for monomial, coeff in f.terms.items():
        vector[index[monomial]] = coeff
    return vector


def from_vector(vector, n, domain):
    monomials = multilinear_monomials(n)
    return NCPolynomial(domain, {monomials[i]: c for i, c in enumerate(vector) if c != 0})


class MultilinearSpace:
    """Subspace of P_n; coordinates follow multilinear_monomials(n)."""

    __slots__ = ('degree', 'subspace')

    def __init__(self, degree, subspace):
        if subspace.ambient != len(multilinear_monomials(degree)):
            raise DimensionMismatchError('P_{} has dimension {}, got ambient {}'.format(
                degree, len(multilinear_monomials(degree)), subspace.ambient))
        self.degree = degree
        self.subspace = subspace

    @property
    def domain(self):
        return self.subspace.domain

    @property
    def dimension(self):
        return self.subspace.rank

    @property
    def ambient(self):
        return self.subspace.ambient

    def polynomials(self):
        return [from_vector(row, self.degree, self.domain) for row in self.subspace.basis]

    def contains(self, f):
        if f.is_zero():
            return True
        return member(to_vector(f.change_domain(self.domain) if f.domain != self.domain else f, self.degree),
                      self.subspace)

    def __contains__(self, f):
        return self.contains(f)

    def is_subspace_of(self, other):
        return self.degree == other.degree and other.subspace.contains(self.subspace)

    def permuted(self, tau):
        """Image under x_i -> x_tau(i); `tau` maps 1..n to 1..n."""
        builder = SpanBuilder(self.domain, self.ambient)
        for f in self.polynomials():
            builder.add(to_vector(f.rename(tau), self.degree))
        return MultilinearSpace(self.degree, builder.subspace())

    def is_symmetric(self):
        for i in range(1, self.degree):
            if self.permuted({i: i + 1, i + 1: i}) != self:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, MultilinearSpace) and self.degree == other.degree and self.subspace == other.subspace

    def __hash__(self):
        return hash((self.degree, self.subspace))

    def __repr__(self):
        return 'MultilinearSpace(n={}, dim={} of {})'.format(self.degree, self.dimension, self.ambient)


def restrict_basis(basis, indices):
    return [basis[i] for i in indices]


def _check_degree(n, config):
    if n < 1:
        raise ValueError('Degree must be positive, got {}'.format(n))
    check_cap('multilinear degree', n, config.max_degree)


def _monomial_values(assigned, n):
    """Products of assigned[sigma(1)] ... assigned[sigma(n)] for sigma in lexicographic order."""
    values = []

    def walk(prefix_product, used):
        if len(used) == n:
            values.append(prefix_product)
            return
        for position in range(n):
            if position not in used:
                used.append(position)
                walk(prefix_product @ assigned[position], used)
                used.pop()

    for first in range(n):
        walk(assigned[first], [first])
    return values


def multilinear_identities(algebra_basis, n, config=None):
    """
    Multilinear identities of degree n of the algebra spanned by `algebra_basis`: the nullspace
    of the evaluation system over all n-tuples of basis matrices. Multilinearity makes basis
    substitutions sufficient.
    """
    config = resolve_config(config)
    _check_degree(n, config)
    if not algebra_basis:
        raise ValueError('The algebra basis is empty')
    domain = require_same_domain(*(b.domain for b in algebra_basis))
    if not domain.is_field:
        raise DomainMismatchError('Identity spaces are computed over a field, got {}'.format(domain))
    size = algebra_basis[0].rows
    for b in algebra_basis:
        if b.shape != (size, size):
            raise DimensionMismatchError('Basis matrices must all be {0}x{0}, got {1}'.format(size, b.shape))
    n_tuples = len(algebra_basis) ** n
    check_cap('basis assignments', n_tuples, config.max_assignments)

    def constraints():
        for indices in progress(product(range(len(algebra_basis)), repeat=n), config,
                                desc='evaluating P_{}'.format(n), total=n_tuples):
            values = _monomial_values([algebra_basis[i] for i in indices], n)
            for r in range(size):
                for c in range(size):
                    yield [value.entries[r][c] for value in values]

    space = MultilinearSpace(n, left_nullspace_of_rows(domain, constraints(), len(multilinear_monomials(n)),
                                                       config))
    logger.info('multilinear identities of degree %d: dimension %d of %d', n, space.dimension, space.ambient)
    return space


def _ordered_placements(n, k):
    """
    Ways to write a permutation of 1..n as m0 m1 ... mk m(k+1) with m1..mk nonempty, returned as
    (permutation, cut points); padding m0 and m(k+1) may be empty.
    """
    for perm in multilinear_monomials(n):
        for cuts in combinations(range(n + 1), k + 1):
            # cuts[0] = |m0|; strictly increasing cuts keep every argument nonempty
            yield perm, cuts


def _consequence_vectors(f, n, index):
    """Vectors of m0 * f(m1, ..., mk) * m(k+1) for every multilinear placement in degree n."""
    variables = f.variables()
    k = len(variables)
    position = {v: j for j, v in enumerate(variables)}
    size = len(index)
    domain = f.domain
    for perm, cuts in _ordered_placements(n, k):
        blocks = [perm[cuts[j]:cuts[j + 1]] for j in range(k)]
        left, right = perm[:cuts[0]], perm[cuts[k]:]
        vector = [domain.zero] * size
        for monomial, coeff in f.terms.items():
            word = left + tuple(x for v in monomial for x in blocks[position[v]]) + right
            vector[index[word]] = coeff
        yield vector


def _check_generators(generators):
    if not generators:
        raise ValueError('Need at least one generator')
    domain = require_same_domain(*(g.domain for g in generators))
    for g in generators:
        if not g.is_multilinear():
            raise ValueError('Generator {} is not multilinear'.format(g))
    return domain


def t_consequences(generators, n, config=None):
    """Degree-n multilinear component of the T-ideal generated by multilinear `generators`."""
    config = resolve_config(config)
    _check_degree(n, config)
    domain = _check_generators(generators)
    index = monomial_index(n)
    builder = SpanBuilder(domain, len(index), config)
    for f in generators:
        if f.is_zero() or len(f.variables()) > n:
            continue
        for vector in _consequence_vectors(f, n, index):
            builder.add(vector)
            if builder.rank == len(index):
                break
    space = MultilinearSpace(n, builder.subspace())
    logger.info('T-consequences in degree %d: dimension %d of %d', n, space.dimension, space.ambient)
    return space


def tideal_product_component(gens2, gens1, n, config=None):
    """
    Degree-n multilinear component of the product T-ideal I2 * I1: spans of u * v with u a
    consequence of gens2 on a nonempty variable block and v a consequence of gens1 on the
    complementary nonempty block.
    """
    config = resolve_config(config)
    _check_degree(n, config)
    domain = require_same_domain(_check_generators(gens2), _check_generators(gens1))
    index = monomial_index(n)
    builder = SpanBuilder(domain, len(index), config)
    left_parts = {s: t_consequences(gens2, s, config).polynomials() for s in range(1, n)}
    right_parts = {s: t_consequences(gens1, s, config).polynomials() for s in range(1, n)}
    for s in range(1, n):
        if not left_parts[s] or not right_parts[n - s]:
            continue
        for block in combinations(range(1, n + 1), s):
            rest = tuple(v for v in range(1, n + 1) if v not in block)
            left_names = {i + 1: v for i, v in enumerate(block)}
            right_names = {i + 1: v for i, v in enumerate(rest)}
            for u in left_parts[s]:
                u_block = u.rename(left_names)
                for v in right_parts[n - s]:
                    builder.add(to_vector(u_block * v.rename(right_names), n))
    space = MultilinearSpace(n, builder.subspace())
    logger.info('T-ideal product in degree %d: dimension %d of %d', n, space.dimension, space.ambient)
    return space


def multilinear_space_of(polynomials, n, domain=RATIONALS, config=None):
    """Span of the given multilinear polynomials in x1..xn."""
    builder = SpanBuilder(domain, len(multilinear_monomials(n)), config)
    for f in polynomials:
        builder.add(to_vector(f, n))
    return MultilinearSpace(n, builder.subspace())
