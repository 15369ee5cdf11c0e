# -*- coding: utf-8 -*-
# file: closure.py
# time: 2026/10/17

import logging
from collections import deque

import numpy as np

from varkit.utils.varkit_utils import check_cap, resolve_config

logger = logging.getLogger(__name__)


class FiniteGroupTable:
    """
    Enumerated finite group. Elements are indexed 0..order-1 in discovery order (0 is the
    identity); `steps[i, s]` is the index of elements[i] * moves[s], where the moves are the
    generators followed by their inverses. Every element except the identity remembers the
    element and move it was discovered from, which lets the full Cayley table be rebuilt column by
    column and lets homomorphic images be computed along the same spanning tree.
    """

    def __init__(self, elements, steps, parents, moves, n_generators, name=None):
        self.elements = list(elements)
        self.index = {element: i for i, element in enumerate(self.elements)}
        self.steps = steps
        self.parents = parents
        self.moves = moves
        self.n_generators = n_generators
        self.name = name
        self._cayley = None
        self._inverses = None

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def identity(self):
        return 0

    @property
    def generator_indices(self):
        return [int(self.steps[0, s]) for s in range(self.n_generators)]

    @property
    def cayley(self):
        if self._cayley is None:
            order = self.order
            table = np.empty((order, order), dtype=np.int64)
            table[:, 0] = np.arange(order)
            for j in range(1, order):
                parent, move = self.parents[j]
                table[:, j] = self.steps[table[:, parent], move]
            self._cayley = table
        return self._cayley

    @property
    def inverses(self):
        if self._inverses is None:
            self._inverses = np.argmax(self.cayley == self.identity, axis=1)
        return self._inverses

    def multiply(self, i, j):
        return int(self.cayley[i, j])

    def inverse(self, i):
        return int(self.inverses[i])

    def conjugate(self, g, h):
        """h^-1 g h."""
        return self.multiply(self.multiply(self.inverse(h), g), h)

    def commutator(self, g, h):
        """g^-1 h^-1 g h."""
        return self.multiply(self.multiply(self.inverse(g), self.inverse(h)), self.multiply(g, h))

    def element_power(self, g, exponent):
        if exponent < 0:
            g, exponent = self.inverse(g), -exponent
        result = self.identity
        for _ in range(exponent):
            result = self.multiply(result, g)
        return result

    def evaluate_word(self, word, assignment):
        """Value of a free-group word with x_i -> assignment[i] (element indices)."""
        result = self.identity
        for gen, exp in word.syllables:
            if gen not in assignment:
                raise ValueError('No group element assigned to x{}'.format(gen))
            result = self.multiply(result, self.element_power(assignment[gen], exp))
        return result

    def subgroup_generated(self, indices):
        members = {self.identity}
        frontier = deque(members)
        generators = sorted(set(int(i) for i in indices))
        while frontier:
            current = frontier.popleft()
            for g in generators:
                product = self.multiply(current, g)
                if product not in members:
                    members.add(product)
                    frontier.append(product)
        return sorted(members)

    def normal_closure(self, indices):
        conjugates = {self.conjugate(int(g), h) for g in indices for h in range(self.order)}
        return self.subgroup_generated(conjugates)

    def is_subgroup(self, indices):
        members = set(indices)
        if self.identity not in members:
            return False
        return all(self.multiply(a, self.inverse(b)) in members for a in members for b in members)

    def is_normal(self, indices):
        members = set(indices)
        return self.is_subgroup(members) and all(self.conjugate(g, h) in members
                                                 for g in members for h in range(self.order))

    def is_abelian(self):
        table = self.cayley
        return bool(np.array_equal(table, table.T))

    def __repr__(self):
        return 'FiniteGroupTable({}order={})'.format('{}, '.format(self.name) if self.name else '', self.order)


def group_closure(rep, config=None, name=None):
    """Breadth-first enumeration of the group generated by rep's generators and their inverses."""
    config = resolve_config(config)
    moves = list(rep.generators) + list(rep.inverses)
    identity = rep.identity()
    elements = [identity]
    index = {identity: 0}
    parents = [None]
    rows = []
    frontier = deque([0])
    while frontier:
        current = frontier.popleft()
        row = []
        for s, move in enumerate(moves):
            product = elements[current] @ move
            found = index.get(product)
            if found is None:
                check_cap('group order', len(elements) + 1, config.max_group_order)
                found = len(elements)
                index[product] = found
                elements.append(product)
                parents.append((current, s))
                frontier.append(found)
            row.append(found)
        rows.append(row)
    steps = np.array(rows, dtype=np.int64).reshape(len(elements), len(moves))
    logger.info('group closure: %d elements from %d generators', len(elements), rep.rank)
    return FiniteGroupTable(elements, steps, parents, moves, rep.rank, name)


def represent(rep, table):
    """
    Images of all table elements under the homomorphism sending the table's i-th generator to
    rep's i-th generator; raises ValueError when that assignment is not a homomorphism.
    """
    if rep.rank != table.n_generators:
        raise ValueError('Representation has {} generators, the group table {}'.format(rep.rank, table.n_generators))
    moves = list(rep.generators) + list(rep.inverses)
    images = [rep.identity()]
    for j in range(1, table.order):
        parent, move = table.parents[j]
        images.append(images[parent] @ moves[move])
    for i in range(table.order):
        for s, move in enumerate(moves):
            if images[int(table.steps[i, s])] != images[i] @ move:
                raise ValueError('Generator assignment does not extend to a homomorphism')
    return images


def kernel_elements(rep, table):
    """Indices of the table elements acting as the identity."""
    identity = rep.identity()
    return [i for i, image in enumerate(represent(rep, table)) if image == identity]
