# -*- coding: utf-8 -*-
# file: acceptance_benchmark.py
# time: 2026/10/17

"""
Desk-scale reproductions of the algebraic facts the library is built around. Every runner
returns a dict of findings and logs a one-line summary.
"""

import logging
import random
import time
from itertools import product

from varkit.catalog_utils import GroupCatalog, load_group
from varkit.tasks.dimsub import (FiniteGroupAlgebra, compare_series, dimension_series, dimension_subgroup_sigma,
                                 lower_central_series)
from varkit.tasks.exact.matrix import DenseMatrix
from varkit.tasks.exact.scalars import INTEGERS, RATIONALS, prime_field
from varkit.tasks.exact.echelon import span
from varkit.tasks.freegrp.words import Word, left_normed_commutator, random_word
from varkit.tasks.grpalg.group_algebra import s_n_identity_element
from varkit.tasks.magnus.series import dimension_degree, in_free_dimension_subgroup
from varkit.tasks.matrep import (aug_image_nilpotency, check_action_identity, enveloping_algebra,
                                 group_closure, units_of_scalar_plus_nilpotent, ut_natural)
from varkit.tasks.ncpoly import (NCPolynomial, evaluate, multilinear_identities, standard_polynomial,
                                 tideal_product_component)
from varkit.utils.varkit_utils import resolve_config

logger = logging.getLogger(__name__)

COMMUTATOR = NCPolynomial(RATIONALS, {(1, 2): 1, (2, 1): -1})


def _units(domain, n):
    return [[DenseMatrix.unit(domain, n, n, i, j) for j in range(n)] for i in range(n)]


def _finish(name, findings, start):
    findings['seconds'] = round(time.time() - start, 3)
    logger.info('%s: %s', name, findings)
    return findings


def _random_commutator(rng, weight):
    return left_normed_commutator([random_word(rng, 2, rng.randint(1, 3)) for _ in range(weight)])


def _has_nonzero_abelianization(w):
    sums = {}
    for gen, exp in w.syllables:
        sums[gen] = sums.get(gen, 0) + exp
    return any(sums.values())


def run_magnus_lower_central(seed=0, samples=100, config=None):
    """Left-normed commutators sit deep in the dimension series; words with nonzero exponent sums do not."""
    start = time.time()
    config = resolve_config(config)
    rng = random.Random(seed)
    letters = (Word.generator(1), Word.generator(2))
    basic = {}
    for weight in range(2, 6):
        # every left-normed commutator of the letters, trivial ones included
        basic[weight] = sum(dimension_degree(left_normed_commutator(list(seq)), 2, 6, config).at_least(weight)
                            for seq in product(letters, repeat=weight))
    products = {}
    for n in range(2, 6):
        passed = 0
        for _ in range(samples):
            w = Word()
            for _ in range(rng.randint(1, 3)):
                w = w * _random_commutator(rng, n)
            passed += in_free_dimension_subgroup(w, n, 2, config)
        products[n] = passed
    rejected = 0
    tried = 0
    while tried < samples:
        w = random_word(rng, 2, rng.randint(1, 8))
        if not _has_nonzero_abelianization(w):
            continue
        tried += 1
        rejected += not in_free_dimension_subgroup(w, 2, 2, config)
    return _finish('magnus', {'basic_commutators': basic, 'commutator_products_passed': products,
                              'abelian_words_rejected': rejected, 'samples': samples}, start)


def run_amitsur_levitzky(config=None):
    start = time.time()
    config = resolve_config(config)
    m2 = [m for row in _units(RATIONALS, 2) for m in row]
    s4_in_m2 = standard_polynomial(4) in multilinear_identities(m2, 4, config)
    s2_in_m2 = standard_polynomial(2) in multilinear_identities(m2, 2, config)
    e = _units(RATIONALS, 3)
    # s4(E11, E12, E23, E33) = E13 in M3
    s4_m3 = evaluate(standard_polynomial(4), {1: e[0][0], 2: e[0][1], 3: e[1][2], 4: e[2][2]})
    return _finish('amitsur-levitzky', {'s4_identity_of_M2': s4_in_m2, 's2_identity_of_M2': s2_in_m2,
                                        's4_value_in_M3_nonzero': not s4_m3.is_zero()}, start)


def run_unitriangular_nilpotency(config=None):
    start = time.time()
    config = resolve_config(config)
    results = {}
    for domain in (RATIONALS, prime_field(2)):
        for n in range(2, 6):
            rep = ut_natural(n, domain)
            results[(str(domain), n)] = (aug_image_nilpotency(rep, n, config),
                                         aug_image_nilpotency(rep, n - 1, config))
    oracle = {}
    for n in range(1, 4):
        rep = ut_natural(n, prime_field(2))
        table = group_closure(rep, config)
        for k in range(1, 4):
            oracle[(n, k)] = aug_image_nilpotency(rep, k, config) == check_action_identity(
                rep, s_n_identity_element(k), table, config)
    return _finish('unitriangular', {'nilpotency': results, 'oracle_agrees': all(oracle.values())}, start)


def run_scalar_plus_nilpotent_witness(config=None):
    start = time.time()
    config = resolve_config(config)
    results = {}
    for n in (2, 3):
        units = units_of_scalar_plus_nilpotent(n, RATIONALS, 2)
        ut = ut_natural(n, RATIONALS)
        same_envelope = (span(RATIONALS, n * n, [b.flatten() for b in enveloping_algebra(units, config)])
                         == span(RATIONALS, n * n, [b.flatten() for b in enveloping_algebra(ut, config)]))
        results[n] = {'same_envelope': same_envelope,
                      'units_never_nilpotent': not any(aug_image_nilpotency(units, k, config) for k in range(1, 6)),
                      'ut_nilpotent': aug_image_nilpotency(ut, n, config)}
    return _finish('scalar-plus-nilpotent', results, start)


def run_triangular_asymmetry(config=None):
    start = time.time()
    config = resolve_config(config)
    e = _units(RATIONALS, 2)
    identity = DenseMatrix.identity(RATIONALS, 2)
    scalar_plus_corner = multilinear_identities([identity, e[0][1]], 2, config).dimension
    upper = multilinear_identities([e[0][0], e[0][1], e[1][1]], 2, config).dimension
    return _finish('triangular-asymmetry', {'span_I_E12': scalar_plus_corner, 'upper_triangular': upper}, start)


def run_tideal_product(config=None):
    start = time.time()
    config = resolve_config(config)
    e = _units(RATIONALS, 2)
    component = tideal_product_component([COMMUTATOR], [COMMUTATOR], 4, config)
    identities = multilinear_identities([e[0][0], e[0][1], e[1][1]], 4, config)
    return _finish('tideal-product', {'equal': component == identities, 'dimension': component.dimension}, start)


def run_dimension_series_catalog(n_max=4, config=None):
    start = time.time()
    config = resolve_config(config)
    results = {}
    for name in GroupCatalog.Comparison:
        _, table = load_group(name, config)
        comparison = compare_series(dimension_series(FiniteGroupAlgebra(table, INTEGERS, config), n_max),
                                    lower_central_series(table, n_max))
        results[name] = (comparison.all_contained, comparison.all_equal)
    _, c2 = load_group(GroupCatalog.C2, config)
    d2_q = dimension_series(FiniteGroupAlgebra(c2, RATIONALS, config), 2)[1].order
    d2_z = dimension_series(FiniteGroupAlgebra(c2, INTEGERS, config), 2)[1].order
    return _finish('dimension-series', {'catalog': results, 'C2_D2_over_Q': d2_q, 'C2_D2_over_Z': d2_z}, start)


def run_sigma_consistency(config=None):
    start = time.time()
    config = resolve_config(config)
    results = {}
    for name in GroupCatalog.Comparison:
        _, table = load_group(name, config)
        sigma = dimension_subgroup_sigma(FiniteGroupAlgebra(table, RATIONALS, config), [COMMUTATOR])
        results[name] = (sigma.order, sigma.quotient_is_abelian())
    return _finish('sigma-consistency', results, start)


def run_benchmark_for_all(config=None):
    return {'magnus': run_magnus_lower_central(config=config),
            'amitsur_levitzky': run_amitsur_levitzky(config),
            'unitriangular': run_unitriangular_nilpotency(config),
            'scalar_plus_nilpotent': run_scalar_plus_nilpotent_witness(config),
            'triangular_asymmetry': run_triangular_asymmetry(config),
            'tideal_product': run_tideal_product(config),
            'dimension_series': run_dimension_series_catalog(config=config),
            'sigma_consistency': run_sigma_consistency(config)}
