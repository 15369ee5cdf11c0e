# -*- coding: utf-8 -*-
# file: test_ncpoly.py
# time: 2026/10/17

import pytest

from varkit.tasks.exact import DenseMatrix, RATIONALS, prime_field
from varkit.tasks.ncpoly import (NCPolynomial, evaluate, format_polynomial, multilinear_identities,
                                 multilinear_monomials, multilinear_space_of, multilinearize, parse_polynomial,
                                 restrict_basis, standard_polynomial, t_consequences, tideal_product_component,
                                 to_vector)
from varkit.utils.exceptions import DomainMismatchError, ParseError, ResourceCapError, UnsupportedDomainError

x1, x2, x3 = (NCPolynomial.variable(i) for i in (1, 2, 3))


def test_standard_polynomial(commutator_poly):
    assert standard_polynomial(2) == commutator_poly
    assert standard_polynomial(3).terms[(2, 1, 3)] == -1
    assert standard_polynomial(3).terms[(2, 3, 1)] == 1
    assert len(standard_polynomial(4).terms) == 24


def test_evaluate(units2, rng):
    e11, e12, e21, e22 = units2
    assert evaluate(standard_polynomial(2), {1: e11, 2: e12}) == e12
    a = DenseMatrix(RATIONALS, [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
    assert evaluate(standard_polynomial(2), {1: a, 2: a}).is_zero()
    with pytest.raises(ValueError):
        evaluate(standard_polynomial(2), {1: e11})


def test_evaluate_rational_polynomial_over_prime_field():
    f3 = prime_field(3)
    a = DenseMatrix(f3, [[1, 1], [0, 1]])
    assert evaluate(parse_polynomial('3*x1'), {1: a}).is_zero()
    with pytest.raises(DomainMismatchError):
        evaluate(NCPolynomial.variable(1, prime_field(5)), {1: a})


def test_multilinearize():
    assert multilinearize(x1 * x1) == [x1 * x2 + x2 * x1]
    assert multilinearize(x1 * x1 * x2) == [x1 * x3 * x2 + x3 * x1 * x2]
    assert multilinearize(x1 * x2) == [x1 * x2]
    with pytest.raises(UnsupportedDomainError):
        multilinearize(NCPolynomial.variable(1, prime_field(2)) ** 2)


def test_parse_and_format(commutator_poly):
    assert parse_polynomial('x1*x2 - x2*x1') == commutator_poly
    assert parse_polynomial('x1^2*x2') == x1 * x1 * x2
    assert parse_polynomial('1/2*(x1 + x2)*x3') == (x1 * x3 + x2 * x3).scale(RATIONALS.coerce(1) / 2)
    assert format_polynomial(commutator_poly) == 'x1*x2 - x2*x1'
    for text in ('x1x2', 'x1 +', '(x1', 'x1^-1'):
        with pytest.raises(ParseError):
            parse_polynomial(text)


def test_vector_coordinates(commutator_poly):
    assert multilinear_monomials(2) == ((1, 2), (2, 1))
    assert to_vector(commutator_poly, 2) == [1, -1]
    with pytest.raises(ValueError):
        to_vector(x1 * x1, 2)


def test_identities_of_small_algebras(units2, commutator_poly):
    one = [DenseMatrix.identity(RATIONALS, 1)]
    space = multilinear_identities(one, 2)
    assert space.dimension == 1
    assert space.polynomials() == [commutator_poly]
    assert multilinear_identities(units2, 2).dimension == 0
    assert standard_polynomial(4) in multilinear_identities(units2, 4)
    assert standard_polynomial(3) not in multilinear_identities(units2, 3)


def test_identities_shrink_as_the_algebra_grows(units2):
    upper = restrict_basis(units2, [0, 1, 3])
    for n in (2, 3):
        full = multilinear_identities(units2, n)
        part = multilinear_identities(upper, n)
        assert full.is_subspace_of(part)
        assert part.is_symmetric()


def test_t_consequences(commutator_poly):
    assert t_consequences([x1], 1).dimension == 1
    assert t_consequences([commutator_poly], 2).dimension == 1
    assert t_consequences([commutator_poly], 3).dimension == 5
    with pytest.raises(ValueError):
        t_consequences([x1 * x1], 2)


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_commutator_generates_identities_of_the_field(n, commutator_poly):
    one = [DenseMatrix.identity(RATIONALS, 1)]
    assert t_consequences([commutator_poly], n) == multilinear_identities(one, n)


def test_tideal_product(units2, commutator_poly):
    assert tideal_product_component([commutator_poly], [commutator_poly], 2).dimension == 0
    assert tideal_product_component([x1], [x1], 2).dimension == 2
    upper = restrict_basis(units2, [0, 1, 3])
    assert tideal_product_component([commutator_poly], [commutator_poly], 4) == multilinear_identities(upper, 4)


def test_multilinear_space_of(commutator_poly):
    space = multilinear_space_of([commutator_poly, commutator_poly.scale(2)], 2)
    assert space.dimension == 1
    assert commutator_poly in space


def test_degree_cap(units2):
    with pytest.raises(ResourceCapError):
        multilinear_identities(units2, 7)


def test_small_examples(units2):
    assert standard_polynomial(1) == x1
    e11 = units2[0]
    assert evaluate(x1, {1: e11}) == e11


@pytest.mark.parametrize('n', [2, 3, 4])
def test_t_ideal_components_are_symmetric(n, commutator_poly):
    assert t_consequences([commutator_poly], n).is_symmetric()
    assert t_consequences([x1], n).is_symmetric()
    if n >= 3:
        assert t_consequences([standard_polynomial(3)], n).is_symmetric()
    assert tideal_product_component([commutator_poly], [commutator_poly], n).is_symmetric()
    assert tideal_product_component([commutator_poly], [x1], n).is_symmetric()
