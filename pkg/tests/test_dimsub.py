# -*- coding: utf-8 -*-
# file: test_dimsub.py
# time: 2026/10/17

import pytest

from varkit.catalog_utils import GroupCatalog, load_group
from varkit.tasks.dimsub import (FiniteGroupAlgebra, SubgroupSet, augmentation_ideal_power, compare_series,
                                 dimension_series, dimension_subgroup_sigma, lower_central_series, verbal_ideal,
                                 verbal_report)
from varkit.tasks.exact import INTEGERS, RATIONALS, prime_field
from varkit.tasks.ncpoly import NCPolynomial
from varkit.utils.exceptions import VarkitError


def _algebra(name, domain=INTEGERS):
    _, table = load_group(name)
    return FiniteGroupAlgebra(table, domain)


def _monomial(n):
    return NCPolynomial(RATIONALS, {tuple(range(1, n + 1)): 1})


def test_trivial_group():
    alg = _algebra('C1')
    assert augmentation_ideal_power(alg, 3).is_zero()
    assert [d.order for d in dimension_series(alg, 3)] == [1, 1, 1]


def test_cyclic_group_of_order_two():
    alg = _algebra('C2')
    assert augmentation_ideal_power(alg, 1).basis == ((1, -1),)
    assert augmentation_ideal_power(alg, 2).basis == ((2, -2),)
    assert [d.order for d in dimension_series(alg, 2)] == [2, 1]
    assert [d.order for d in dimension_series(_algebra('C2', RATIONALS), 2)] == [2, 2]


def test_powers_form_a_chain():
    alg = _algebra('D4')
    for n in range(1, 4):
        assert augmentation_ideal_power(alg, n).contains(augmentation_ideal_power(alg, n + 1))


def test_group_algebra_products():
    alg = _algebra('S3', RATIONALS)
    g, h = alg.table.generator_indices
    product = alg.multiply(alg.basis_element(g), alg.basis_element(h))
    assert product == alg.basis_element(alg.table.multiply(g, h))
    assert alg.right_translate(alg.basis_element(g), h) == product
    assert alg.left_translate(g, alg.basis_element(h)) == product
    assert alg.augmentation(alg.group_minus_one(g)) == 0


def test_rational_dimension_series_of_s3():
    # the rational augmentation ideal of a finite group is idempotent
    alg = _algebra('S3', RATIONALS)
    assert augmentation_ideal_power(alg, 3) == augmentation_ideal_power(alg, 1)
    assert [d.order for d in dimension_series(alg, 3)] == [6, 6, 6]
    assert [d.order for d in dimension_series(_algebra('S3'), 3)] == [6, 3, 3]


def test_lower_central_series():
    assert [g.order for g in lower_central_series(load_group('C4')[1], 2)] == [4, 1]
    assert [g.order for g in lower_central_series(load_group('S3')[1], 3)] == [6, 3, 3]
    assert [g.order for g in lower_central_series(load_group('Q8')[1], 3)] == [8, 2, 1]
    assert [g.order for g in lower_central_series(load_group('UT3F2')[1], 3)] == [8, 2, 1]


@pytest.mark.parametrize('name', GroupCatalog.Comparison)
def test_integral_dimension_series_matches_lower_central_series(name):
    _, table = load_group(name)
    comparison = compare_series(dimension_series(FiniteGroupAlgebra(table, INTEGERS), 4),
                                lower_central_series(table, 4))
    assert comparison.all_contained
    assert comparison.all_equal
    assert not comparison.findings()


def test_comparison_format_and_lengths():
    _, table = load_group('C2')
    comparison = compare_series(dimension_series(FiniteGroupAlgebra(table, RATIONALS), 2),
                                lower_central_series(table, 2))
    assert comparison.format() == ['# n\tgamma_n\tD_n\tcontained\tequal', '1\t2\t2\ttrue\ttrue',
                                   '2\t1\t2\ttrue\tfalse']
    assert len(comparison.findings()) == 1
    with pytest.raises(ValueError):
        compare_series(dimension_series(FiniteGroupAlgebra(table, RATIONALS), 2), lower_central_series(table, 1))


def test_subgroup_set_requires_normality():
    _, table = load_group('S3')
    with pytest.raises(VarkitError):
        SubgroupSet(table, table.subgroup_generated([table.generator_indices[0]]))


def test_verbal_ideal_of_the_commutator(commutator_poly):
    s3 = _algebra('S3', RATIONALS)
    assert verbal_ideal(s3, [commutator_poly]).rank == 4
    sigma = dimension_subgroup_sigma(s3, [commutator_poly])
    assert sigma.order == 3
    assert sigma.quotient_is_abelian()
    c4 = _algebra('C4', RATIONALS)
    assert verbal_ideal(c4, [commutator_poly]).is_zero()
    assert dimension_subgroup_sigma(c4, [commutator_poly]).order == 1


def test_verbal_ideal_of_a_variable():
    alg = _algebra('D4', RATIONALS)
    assert verbal_ideal(alg, [_monomial(1)]).rank == 8
    assert dimension_subgroup_sigma(alg, [_monomial(1)]).order == 8


@pytest.mark.parametrize('name', GroupCatalog.Comparison)
@pytest.mark.parametrize('domain', [INTEGERS, RATIONALS, prime_field(2)], ids=str)
def test_products_of_augmentation_elements_give_the_powers(name, domain):
    alg = _algebra(name, domain)
    table = alg.table
    substitutions = [alg.group_minus_one(g) for g in range(table.order) if g != table.identity]
    for n in (1, 2, 3):
        assert verbal_ideal(alg, [_monomial(n)], substitutions) == augmentation_ideal_power(alg, n)


@pytest.mark.parametrize('name', GroupCatalog.Comparison)
@pytest.mark.parametrize('domain', [INTEGERS, RATIONALS, prime_field(2)], ids=str)
def test_powers_and_dimension_subgroups_descend(name, domain):
    alg = _algebra(name, domain)
    powers = [augmentation_ideal_power(alg, n) for n in range(1, 5)]
    for upper, lower in zip(powers, powers[1:]):
        assert upper.contains(lower)
    series = dimension_series(alg, 4)
    assert series[0].order == alg.table.order
    for upper, lower in zip(series, series[1:]):
        assert lower.issubset(upper)


def test_verbal_report(commutator_poly):
    report = verbal_report(_algebra('S3', RATIONALS), [commutator_poly])
    assert (report.ideal_dimension, report.group_order, report.sigma_order, report.lower_bound) == (4, 6, 3, False)
    f3 = prime_field(3)
    report = verbal_report(_algebra('S3', f3), [NCPolynomial(f3, {(1, 2): 1, (2, 1): -1})])
    assert report.lower_bound
    with pytest.raises(ValueError):
        verbal_ideal(_algebra('S3', RATIONALS), [NCPolynomial(RATIONALS, {(1, 1): 1})])
