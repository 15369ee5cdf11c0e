# -*- coding: utf-8 -*-
# file: test_grpalg.py
# time: 2026/10/17

from varkit.tasks.exact import INTEGERS, RATIONALS, prime_field
from varkit.tasks.freegrp import Word, commutator, random_word
from varkit.tasks.grpalg import (GroupAlgebraElement, abelian_power_identity_element, augmentation, format_element,
                                 fox_derivative, fox_expansion, parse_element, power_identity_element,
                                 product_identity_element, s_n_identity_element)
from varkit.tasks.matrep import (MatrixRepresentation, check_action_identity, group_closure, t_natural,
                                 triangular_product, ut_natural)

x1, x2 = Word.generator(1), Word.generator(2)


def test_augmentation_is_multiplicative():
    u = GroupAlgebraElement(INTEGERS, {x1: 2, x2: -1, Word(): 3})
    v = GroupAlgebraElement(INTEGERS, {x1 * x2: 1, x2: 4})
    assert augmentation(u * v) == augmentation(u) * augmentation(v)
    assert augmentation(s_n_identity_element(3)) == 0


def test_fox_derivatives():
    assert fox_derivative(x1 * x2, 1) == GroupAlgebraElement.one()
    assert fox_derivative(x1 * x2, 2) == GroupAlgebraElement.from_word(x1)
    assert fox_derivative(x1 ** -1, 1) == GroupAlgebraElement.from_word(x1 ** -1, coeff=-1)
    assert fox_derivative(x2, 1).is_zero()


def test_fundamental_formula(rng):
    one = GroupAlgebraElement.one()
    for _ in range(200):
        w = random_word(rng, 3, rng.randint(0, 20))
        assert fox_expansion(w) == GroupAlgebraElement.from_word(w) - one


def test_identity_elements():
    s2 = s_n_identity_element(2)
    assert s2 == GroupAlgebraElement(INTEGERS, {x1 * x2: 1, x1: -1, x2: -1, Word(): 1})
    assert product_identity_element(power_identity_element(1), power_identity_element(1)) == s2
    c = commutator(x1, x2)
    assert abelian_power_identity_element(1) == GroupAlgebraElement(INTEGERS, {c: 1, Word(): -1})


def test_format_element():
    assert format_element(s_n_identity_element(2)) == 'x1x2 - x1 - x2 + 1'
    assert format_element(GroupAlgebraElement.zero()) == '0'


def test_parse_element():
    assert parse_element('(y1-1)(y2-1)') == s_n_identity_element(2, RATIONALS)
    assert parse_element('(y1 - 1)^2') == power_identity_element(2, RATIONALS)


def test_arithmetic_examples():
    one = GroupAlgebraElement.one(RATIONALS)
    y = GroupAlgebraElement.from_word(x1, RATIONALS)
    assert GroupAlgebraElement.from_word(x1) * GroupAlgebraElement.from_word(x1 ** -1) == GroupAlgebraElement.one()
    assert (y - one) * (y + one) == GroupAlgebraElement.from_word(x1 ** 2, RATIONALS) - one
    assert (GroupAlgebraElement.zero() * s_n_identity_element(2)).is_zero()
    assert augmentation(GroupAlgebraElement.one()) == 1
    assert augmentation(GroupAlgebraElement(INTEGERS, {x1: 2, x2: 3})) == 5
    assert s_n_identity_element(1) == GroupAlgebraElement.generator_minus_one(1)


def test_s_n_recursion():
    for n in range(2, 6):
        step = GroupAlgebraElement.generator_minus_one(n)
        assert s_n_identity_element(n) == s_n_identity_element(n - 1) * step


def test_abelian_power_identity_on_triangular_matrices():
    f3 = prime_field(3)
    rep = t_natural(2, f3)
    table = group_closure(rep)
    assert not check_action_identity(rep, abelian_power_identity_element(1, f3), table)
    assert check_action_identity(rep, abelian_power_identity_element(2, f3), table)


def test_triangular_product_satisfies_the_product_identity():
    f2 = prime_field(2)
    top, bottom = ut_natural(2, f2), MatrixRepresentation(f2, 1, [])
    rep = triangular_product(top, bottom)
    table = group_closure(rep)
    assert table.order == 8
    assert check_action_identity(top, s_n_identity_element(2, f2), group_closure(top))
    assert check_action_identity(bottom, s_n_identity_element(1, f2), group_closure(bottom))
    assert check_action_identity(rep, product_identity_element(s_n_identity_element(2, f2),
                                                               s_n_identity_element(1, f2)), table)
    assert not check_action_identity(rep, s_n_identity_element(2, f2), table)
