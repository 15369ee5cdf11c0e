# -*- coding: utf-8 -*-
# file: test_matrep.py
# time: 2026/10/17

import pytest

from varkit.catalog_utils import load_group
from varkit.tasks.exact import DenseMatrix, RATIONALS, prime_field, span
from varkit.tasks.freegrp import Word, commutator, left_normed_commutator, random_word
from varkit.tasks.grpalg import parse_element, s_n_identity_element
from varkit.tasks.magnus import dimension_degree
from varkit.tasks.matrep import (MatrixRepresentation, aug_image_nilpotency, augmentation_image,
                                 check_action_identity, check_polynomial_identity, enveloping_algebra,
                                 find_action_witness, find_polynomial_witness, format_representation, format_witness,
                                 group_closure, is_invariant_block, kernel_elements, read_algebra,
                                 read_representation, represent, restrict_block, sample_nonidentity_image,
                                 t_natural, triangular_product, units_of_scalar_plus_nilpotent, ut_natural)
from varkit.tasks.ncpoly import NCPolynomial, standard_polynomial
from varkit.utils.exceptions import ParseError, ResourceCapError

C2_TEXT = 'kind=perm\ndegree=2\ngen=(1 2)\n'


def test_natural_representations(f2, f3):
    assert ut_natural(2).generators == (DenseMatrix(RATIONALS, [[1, 1], [0, 1]]),)
    assert ut_natural(1).rank == 0
    assert group_closure(ut_natural(1, f2)).order == 1
    assert group_closure(ut_natural(3, f2)).order == 8
    assert group_closure(t_natural(2, f3)).order == 12
    assert t_natural(1).generators == (DenseMatrix(RATIONALS, [[2]]),)
    with pytest.raises(ValueError):
        t_natural(2, f3, diagonal_units=(0,))
    with pytest.raises(ValueError):
        units_of_scalar_plus_nilpotent(2, RATIONALS, 1)
    with pytest.raises(ValueError):
        MatrixRepresentation(RATIONALS, 2, [DenseMatrix(RATIONALS, [[1, 1], [1, 1]])])


def test_group_table():
    _, table = load_group('S3')
    assert table.order == 6
    assert not table.is_abelian()
    g = table.generator_indices[0]
    assert table.multiply(g, table.inverse(g)) == table.identity
    assert len(table.normal_closure([g])) == 6
    rotation = table.generator_indices[1]
    assert len(table.subgroup_generated([rotation])) == 3
    assert table.is_normal(table.subgroup_generated([rotation]))
    assert not table.is_normal(table.subgroup_generated([g]))
    assert table.evaluate_word(commutator(Word.generator(1), Word.generator(2)), {1: g, 2: g}) == table.identity


def test_group_order_cap(config):
    config.max_group_order = 5
    with pytest.raises(ResourceCapError):
        load_group('S3', config)


def test_represent_and_kernel():
    c2 = read_representation(C2_TEXT)
    table = group_closure(c2)
    assert kernel_elements(c2, table) == [0]
    trivial = MatrixRepresentation(RATIONALS, 1, [DenseMatrix(RATIONALS, [[1]])])
    assert kernel_elements(trivial, table) == [0, 1]
    with pytest.raises(ValueError):
        represent(MatrixRepresentation(RATIONALS, 1, [DenseMatrix(RATIONALS, [[2]])]), table)


def test_enveloping_algebra(f3):
    trivial = MatrixRepresentation(RATIONALS, 3, [])
    assert len(enveloping_algebra(trivial)) == 1
    assert len(enveloping_algebra(ut_natural(3))) == 4
    assert len(enveloping_algebra(t_natural(2, f3))) == 3
    assert augmentation_image(trivial) == []


@pytest.mark.parametrize('n', [2, 3, 4])
def test_unitriangular_nilpotency(n):
    rep = ut_natural(n)
    assert aug_image_nilpotency(rep, n)
    assert not aug_image_nilpotency(rep, n - 1)
    assert not aug_image_nilpotency(units_of_scalar_plus_nilpotent(n, RATIONALS, 2), n)


@pytest.mark.parametrize('k', [1, 2, 3])
def test_nilpotency_agrees_with_exhaustive_check(k, f2, f3):
    for rep in (ut_natural(1, f2), ut_natural(2, f2), ut_natural(3, f2), t_natural(2, f3)):
        table = group_closure(rep)
        assert aug_image_nilpotency(rep, k) == check_action_identity(rep, s_n_identity_element(k), table)


def test_action_witness(f2):
    rep = ut_natural(2, f2)
    table = group_closure(rep)
    assert find_action_witness(rep, parse_element('(y1-1)(y2-1)', f2), table) is None
    witness = find_action_witness(rep, parse_element('y1 - 1', f2), table)
    assert witness.vector == (1, 0)
    assert witness.value == DenseMatrix(f2, [[0, 1], [0, 0]])
    lines = format_witness(witness, table, f2)
    assert lines[0] == 'y1\t1 1; 0 1'
    assert lines[-1] == 'value\t0 1; 0 0'


def test_polynomial_identities(f2, f3):
    commutator_f2 = NCPolynomial(f2, {(1, 2): 1, (2, 1): -1})
    rep = ut_natural(2, f2)
    assert check_polynomial_identity(rep, commutator_f2, group_closure(rep))
    rep = t_natural(2, f3)
    table = group_closure(rep)
    witness = find_polynomial_witness(rep, NCPolynomial(f3, {(1, 2): 1, (2, 1): -1}), table)
    assert witness is not None and not witness.value.is_zero()
    assert check_polynomial_identity(rep, standard_polynomial(4, f3), table)
    # x1*x1 is not multilinear and takes the enumeration path
    assert not check_polynomial_identity(rep, NCPolynomial(f3, {(1, 1): 1}), table)


def test_triangular_product():
    point = MatrixRepresentation(RATIONALS, 1, [])
    assert triangular_product(point, point).generators == ut_natural(2).generators
    rep1, rep2 = ut_natural(2), t_natural(1)
    product = triangular_product(rep1, rep2)
    assert product.dim == 3
    for g in product.generators:
        assert all(g.entries[r][c] == 0 for r in range(2, 3) for c in range(2))
    right = [g for g, label in zip(product.generators, product.labels) if label.startswith('R.')]
    assert [g.submatrix(2, 3, 2, 3) for g in right] == list(rep2.generators)
    assert is_invariant_block(product, 2, 3)
    assert not is_invariant_block(product, 0, 2)
    assert DenseMatrix(RATIONALS, [[2]]) in restrict_block(product, 2, 3).generators
    with pytest.raises(ValueError):
        restrict_block(product, 0, 2)


def test_triangular_product_nilpotency():
    product = triangular_product(ut_natural(2), ut_natural(2))
    assert aug_image_nilpotency(product, 4)
    assert not aug_image_nilpotency(product, 3)


def test_representation_files(f3, write_file):
    rep = t_natural(2, f3)
    assert read_representation(format_representation(rep)) == rep
    path = write_file('t2.rep', format_representation(rep))
    assert read_representation(path) == rep
    s3 = read_representation('kind=perm\nfield=Q\ndegree=3\ngen=(1 2)\ngen=(1 2 3)  # rotation\n')
    assert group_closure(s3).order == 6
    assert s3.generators[0] == DenseMatrix(RATIONALS, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    basis = read_algebra('kind=algebra\nfield=Q\ndim=2\nbasis=1 0; 0 1\nbasis=0 1; 0 0\n')
    assert len(basis) == 2


@pytest.mark.parametrize('text', [
    'kind=matrix\nfield=Q\ndim=2\ngen=1 1; 1 1\n',
    'kind=matrix\nfield=Q\ndim=2\ngen=1 0 0; 0 1 0\n',
    'kind=matrix\nfield=Q\ndim=2\ncolour=red\n',
    'kind=perm\ndegree=2\ngen=(1 3)\n',
    'kind=group\n',
    'field=Q\ndim=1\n',
    'kind=matrix\nfield=F4\ndim=1\n',
])
def test_bad_representation_files(text):
    with pytest.raises(ParseError):
        read_representation(text)


def test_sampling(rng):
    x1, x2 = Word.generator(1), Word.generator(2)
    f5 = prime_field(5)
    assert sample_nonidentity_image(commutator(x1, x2), 3, 2, f5, rng)
    assert not sample_nonidentity_image(commutator(x1, x2), 2, 2, f5, rng, attempts=20)
    assert sample_nonidentity_image(x1, 2, 1, RATIONALS, rng)


def test_ut_and_triangular_examples(f2):
    units = units_of_scalar_plus_nilpotent(2, RATIONALS, 2)
    assert units.generators == (DenseMatrix(RATIONALS, [[1, 1], [0, 1]]), DenseMatrix(RATIONALS, [[2, 0], [0, 2]]))
    assert enveloping_algebra(units) == enveloping_algebra(ut_natural(2))
    assert group_closure(ut_natural(2, f2)).order == 2
    assert group_closure(MatrixRepresentation(RATIONALS, 2, [])).order == 1
    rep = ut_natural(2, f2)
    assert check_action_identity(rep, parse_element('0', f2), group_closure(rep))


def test_kernel_of_a_fixed_coordinate():
    s3, table = load_group('S3')
    one = DenseMatrix.identity(RATIONALS, 1)
    block = MatrixRepresentation(RATIONALS, 4, [DenseMatrix.block_diagonal(g, one) for g in s3.generators])
    assert kernel_elements(restrict_block(block, 3, 4), table) == list(range(6))


def test_enveloping_algebra_is_a_unital_algebra(f3):
    for rep in (ut_natural(3), t_natural(2, f3), read_representation(C2_TEXT)):
        basis = enveloping_algebra(rep)
        envelope = span(rep.domain, rep.dim * rep.dim, [m.flatten() for m in basis])
        assert rep.identity().flatten() in envelope
        for a in basis:
            for b in basis:
                assert (a @ b).flatten() in envelope


def test_sampling_finds_words_of_low_dimension_degree(rng, config):
    field = prime_field(10007)
    x1, x2 = Word.generator(1), Word.generator(2)
    n = 4
    words = [random_word(rng, 2, rng.randint(1, 10)) for _ in range(30)]
    words += [left_normed_commutator([random_word(rng, 2, rng.randint(1, 3)) for _ in range(weight)])
              for weight in (2, 3) for _ in range(10)]
    words += [commutator(x1, x2), left_normed_commutator([x1, x2, x1])]
    checked = 0
    for w in words:
        if w.is_identity():
            continue
        degree = dimension_degree(w, 2, n, config)
        if not degree.exact or degree.value >= n:
            continue
        checked += 1
        assert sample_nonidentity_image(w, n, 2, field, rng)
    assert checked >= 20


def test_multilinear_witness_stays_under_the_assignment_cap(config):
    s3 = read_representation('kind=perm\nfield=Q\ndegree=3\ngen=(1 2)\ngen=(1 2 3)\n')
    table = group_closure(s3)
    config.max_assignments = 10
    witness = find_polynomial_witness(s3, NCPolynomial(RATIONALS, {(1, 2): 1, (2, 1): -1}), table, config)
    assert witness is not None
    a, b = (table.elements[witness.assignment[v]] for v in (1, 2))
    assert a @ b != b @ a
    assert witness.value == a @ b - b @ a
    assert check_polynomial_identity(s3, standard_polynomial(4), table, config)
    with pytest.raises(ResourceCapError):
        check_polynomial_identity(s3, NCPolynomial(RATIONALS, {(1, 1, 2): 1}), table, config)
