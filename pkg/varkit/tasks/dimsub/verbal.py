# -*- coding: utf-8 -*-
# file: verbal.py
# time: 2026/10/17

import logging
from collections import namedtuple
from itertools import product

from varkit.tasks.dimsub.group_algebra import SubgroupSet
from varkit.utils.exceptions import DomainMismatchError
from varkit.utils.varkit_utils import check_cap, progress

logger = logging.getLogger(__name__)

VerbalReport = namedtuple('VerbalReport', ['ideal_dimension', 'group_order', 'sigma_order', 'lower_bound'])


def _check_generators(alg, gens):
    for f in gens:
        if not f.is_multilinear():
            raise ValueError('Verbal ideals take multilinear generators; multilinearize {} first'.format(f))
        if f.domain.kind == 'F' and f.domain != alg.domain:
            raise DomainMismatchError('Identity over {} used in {}G'.format(f.domain, alg.domain))


def _value_at_group_elements(alg, f, assignment):
    # every monomial of f evaluates to a single group element
    vector = alg.zero()
    table, domain = alg.table, alg.domain
    for monomial, coeff in f.terms.items():
        g = table.identity
        for v in monomial:
            g = table.multiply(g, assignment[v])
        vector[g] = domain.add(vector[g], domain.coerce(coeff))
    return vector


def _value_at_vectors(alg, f, assignment):
    vector = alg.zero()
    for monomial, coeff in f.terms.items():
        term = alg.basis_element(alg.table.identity)
        for v in monomial:
            term = alg.multiply(term, assignment[v])
        vector = alg.add(vector, alg.scale(term, coeff))
    return vector


def verbal_ideal(alg, gens, substitutions=None):
    """
    I_Sigma(KG): the two-sided ideal generated by all values f(s1..sk), f in gens, with the s_i
    running over group elements, or over the given algebra vectors when `substitutions` is set.
    """
    _check_generators(alg, gens)
    config = alg.config
    if alg.domain.characteristic:
        logger.warning('verbal ideal over %s is a lower bound: multilinear values need not generate I_Sigma',
                       alg.domain)
    table = alg.table
    pool = list(range(table.order)) if substitutions is None else [list(s) for s in substitutions]
    evaluate = _value_at_group_elements if substitutions is None else _value_at_vectors
    builder = alg.span_builder()
    full = alg.dimension
    for f in gens:
        if f.is_zero():
            continue
        variables = f.variables()
        total = len(pool) ** len(variables)
        check_cap('verbal ideal evaluations', total, config.max_assignments)
        for values in progress(product(pool, repeat=len(variables)), config, desc='evaluating identities',
                               total=total):
            builder.add(evaluate(alg, f, dict(zip(variables, values))))
            if builder.rank == full:
                break
    frontier = [list(row) for row in builder.subspace().basis]
    moves = sorted(set(table.generator_indices))
    while frontier and builder.rank < full:
        grown = []
        for x in frontier:
            for g in moves:
                for candidate in (alg.left_translate(g, x), alg.right_translate(x, g)):
                    if builder.add(candidate):
                        grown.append(candidate)
        frontier = grown
    ideal = builder.subspace()
    logger.info('verbal ideal in %sG of order %d: rank %d', alg.domain, table.order, ideal.rank)
    return ideal


def _subgroup_of_ideal(alg, ideal):
    table = alg.table
    members = [g for g in range(table.order) if g == table.identity or alg.contains_group_minus_one(g, ideal)]
    return SubgroupSet(table, members)


def dimension_subgroup_sigma(alg, gens, substitutions=None):
    """D_Sigma(G) = {g : g - 1 in I_Sigma(KG)}."""
    return _subgroup_of_ideal(alg, verbal_ideal(alg, gens, substitutions))


def verbal_report(alg, gens):
    """Rank of I_Sigma, |G|, |D_Sigma| and whether the ideal is only a lower bound (characteristic p)."""
    ideal = verbal_ideal(alg, gens)
    sigma = _subgroup_of_ideal(alg, ideal)
    return VerbalReport(ideal.rank, alg.table.order, sigma.order, bool(alg.domain.characteristic))
