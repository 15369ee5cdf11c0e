# -*- coding: utf-8 -*-
# file: identities.py
# time: 2026/10/17

import logging
from collections import namedtuple
from itertools import product

from varkit.tasks.exact.echelon import SpanBuilder, left_nullspace_of_rows, member
from varkit.tasks.matrep.closure import represent
from varkit.tasks.ncpoly.polynomial import evaluate
from varkit.utils.exceptions import DomainMismatchError
from varkit.utils.varkit_utils import check_cap, progress, resolve_config

logger = logging.getLogger(__name__)

# assignment: variable index -> table element index; vector: a basis row e_i with e_i * value != 0
Witness = namedtuple('Witness', ['assignment', 'vector', 'value'])


def representation_kernel(rep, table, config=None):
    """Ker(V, KG): coefficient vectors c over the table elements with sum_g c_g rho(g) = 0."""
    images = represent(rep, table)
    size = rep.dim
    constraints = ([image.entries[r][c] for image in images] for r in range(size) for c in range(size))
    return left_nullspace_of_rows(rep.domain, constraints, table.order, config)


def _coefficients_in(domain, u):
    if u.domain.kind == 'F' and u.domain != domain:
        raise DomainMismatchError('Identity over {} cannot be checked over {}'.format(u.domain, domain))
    return [(word, domain.coerce(coeff)) for word, coeff in u.items()]


def _nonzero_row(value):
    for r, row in enumerate(value.entries):
        if any(x != 0 for x in row):
            return r
    return None


def _unit_vector(domain, size, r):
    return tuple(domain.one if i == r else domain.zero for i in range(size))


def _assignments(variables, table, config, what):
    total = table.order ** len(variables)
    check_cap('{} assignments'.format(what), total, config.max_assignments)
    for values in progress(product(range(table.order), repeat=len(variables)), config,
                           desc='checking {}'.format(what), total=total):
        yield dict(zip(variables, values))


def find_action_witness(rep, u, table, config=None):
    """
    First assignment of group elements to the variables of u with v o u(g1..gk) != 0 for some v,
    or None when (V, G) satisfies the identity x o u = 0.
    """
    config = resolve_config(config)
    domain = rep.domain
    terms = _coefficients_in(domain, u)
    if not terms:
        return None
    kernel = representation_kernel(rep, table, config)
    variables = u.variables()
    images = None
    for assignment in _assignments(variables, table, config, 'action identity'):
        vector = [domain.zero] * table.order
        for word, coeff in terms:
            g = table.evaluate_word(word, assignment)
            vector[g] = domain.add(vector[g], coeff)
        if member(vector, kernel):
            continue
        if images is None:
            images = represent(rep, table)
        value = images[0].scale(0)
        for g, coeff in enumerate(vector):
            if coeff != 0:
                value = value + images[g].scale(coeff)
        row = _nonzero_row(value)
        return Witness(assignment, _unit_vector(domain, rep.dim, row), value)
    return None


def check_action_identity(rep, u, table, config=None):
    return find_action_witness(rep, u, table, config) is None


def _spanning_elements(rep, images, config):
    """Table indices whose images span the enveloping algebra."""
    builder = SpanBuilder(rep.domain, rep.dim * rep.dim, config)
    return [g for g, image in enumerate(images) if builder.add(image.flatten())]


def _witness(rep, assignment, value):
    return Witness(assignment, _unit_vector(rep.domain, rep.dim, _nonzero_row(value)), value)


def find_polynomial_witness(rep, f, table, config=None):
    """First assignment of group elements with f(g1..gk) != 0, or None when f is an identity of (V, G)."""
    config = resolve_config(config)
    if f.is_zero():
        return None
    variables = f.variables()
    images = represent(rep, table)
    if not variables:
        # a nonzero constant never vanishes
        return _witness(rep, {}, evaluate(f, {1: rep.identity()}))
    if f.is_multilinear():
        # multilinear f vanishes on the envelope iff it vanishes on a spanning set of group elements
        spanning = _spanning_elements(rep, images, config)
        for values in product(spanning, repeat=len(variables)):
            assignment = dict(zip(variables, values))
            value = evaluate(f, {v: images[g] for v, g in assignment.items()})
            if not value.is_zero():
                return _witness(rep, assignment, value)
        return None
    for assignment in _assignments(variables, table, config, 'polynomial identity'):
        value = evaluate(f, {v: images[g] for v, g in assignment.items()})
        if not value.is_zero():
            return _witness(rep, assignment, value)
    return None


def check_polynomial_identity(rep, f, table, config=None):
    return find_polynomial_witness(rep, f, table, config) is None


def format_witness(witness, table, domain):
    lines = []
    for variable in sorted(witness.assignment):
        element = table.elements[witness.assignment[variable]]
        lines.append('y{}\t{}'.format(variable, element.format()))
    lines.append('v\t{}'.format(' '.join(domain.format_scalar(x) for x in witness.vector)))
    lines.append('value\t{}'.format(witness.value.format()))
    return lines
