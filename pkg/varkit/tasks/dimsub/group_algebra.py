# -*- coding: utf-8 -*-
# file: group_algebra.py
# time: 2026/10/17

import logging

from varkit.tasks.exact.echelon import SpanBuilder, member
from varkit.tasks.exact.scalars import INTEGERS
from varkit.utils.exceptions import DimensionMismatchError, VarkitError
from varkit.utils.varkit_utils import resolve_config

logger = logging.getLogger(__name__)


class SubgroupSet:
    """Sorted element indices of a subgroup of a FiniteGroupTable, checked to be a normal subgroup."""

    __slots__ = ('table', 'members')

    def __init__(self, table, members, require_normal=True):
        members = tuple(sorted(set(int(g) for g in members)))
        if require_normal and not table.is_normal(members):
            raise VarkitError('Elements {} do not form a normal subgroup of {}'.format(list(members), table))
        self.table = table
        self.members = members

    @property
    def order(self):
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, g):
        return g in self.members

    def __iter__(self):
        return iter(self.members)

    def issubset(self, other):
        return set(self.members) <= set(other.members)

    def quotient_is_abelian(self):
        table = self.table
        members = set(self.members)
        return all(table.commutator(g, h) in members for g in range(table.order) for h in range(table.order))

    def __eq__(self, other):
        return isinstance(other, SubgroupSet) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return 'SubgroupSet(order={})'.format(self.order)


class FiniteGroupAlgebra:
    """KG for an enumerated group; elements are coordinate vectors indexed by table element."""

    def __init__(self, table, domain=INTEGERS, config=None):
        self.table = table
        self.domain = domain
        self.config = resolve_config(config)
        self._powers = []

    @property
    def dimension(self):
        return self.table.order

    def zero(self):
        return [self.domain.zero] * self.dimension

    def basis_element(self, g):
        vector = self.zero()
        vector[g] = self.domain.one
        return vector

    def group_minus_one(self, g):
        """e_g - e_1."""
        vector = self.basis_element(g)
        vector[self.table.identity] = self.domain.sub(vector[self.table.identity], self.domain.one)
        return vector

    def augmentation(self, vector):
        total = self.domain.zero
        for x in vector:
            total = self.domain.add(total, x)
        return total

    def add(self, a, b):
        return [self.domain.add(x, y) for x, y in zip(a, b)]

    def scale(self, a, value):
        value = self.domain.coerce(value)
        return [self.domain.mul(value, x) for x in a]

    def multiply(self, a, b):
        """Cayley convolution."""
        if len(a) != self.dimension or len(b) != self.dimension:
            raise DimensionMismatchError('Group algebra vectors have length {}'.format(self.dimension))
        domain, cayley = self.domain, self.table.cayley
        result = self.zero()
        support_b = [(j, y) for j, y in enumerate(b) if y != 0]
        for i, x in enumerate(a):
            if x == 0:
                continue
            row = cayley[i]
            for j, y in support_b:
                k = int(row[j])
                result[k] = domain.add(result[k], domain.mul(x, y))
        return result

    def right_translate(self, a, g):
        """a * e_g."""
        result = self.zero()
        column = self.table.cayley[:, g]
        for i, x in enumerate(a):
            if x != 0:
                result[int(column[i])] = x
        return result

    def left_translate(self, g, a):
        """e_g * a."""
        result = self.zero()
        row = self.table.cayley[g]
        for i, x in enumerate(a):
            if x != 0:
                result[int(row[i])] = x
        return result

    def span_builder(self):
        return SpanBuilder(self.domain, self.dimension, self.config)

    def contains_group_minus_one(self, g, subspace):
        return member(self.group_minus_one(g), subspace)


def augmentation_ideal_power(alg, n):
    """
    Delta^n as a canonical subspace (fields) or lattice (Z): Delta^1 is spanned by g - 1, and
    Delta^k by the products b (g - 1) for b in a basis of Delta^(k-1).
    """
    if n < 1:
        raise ValueError('n must be positive, got {}'.format(n))
    table = alg.table
    non_identity = [g for g in range(table.order) if g != table.identity]
    if not alg._powers:
        builder = alg.span_builder()
        builder.extend(alg.group_minus_one(g) for g in non_identity)
        alg._powers.append(builder.subspace())
    while len(alg._powers) < n:
        previous = alg._powers[-1]
        builder = alg.span_builder()
        for b in previous.basis:
            for g in non_identity:
                # b (g - 1) = b g - b
                shifted = alg.right_translate(b, g)
                builder.add([alg.domain.sub(x, y) for x, y in zip(shifted, b)])
        alg._powers.append(builder.subspace())
        logger.info('augmentation ideal power %d over %s: rank %d', len(alg._powers), alg.domain,
                    alg._powers[-1].rank)
    return alg._powers[n - 1]
