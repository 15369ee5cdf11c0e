# -*- coding: utf-8 -*-
# file: test_magnus.py
# time: 2026/10/17

import pytest

from varkit.tasks.exact import RATIONALS, prime_field
from varkit.tasks.freegrp import Word, commutator, left_normed_commutator, random_word
from varkit.tasks.magnus import (DimensionDegree, TruncatedSeries, cutoff_cap, dimension_degree, format_series,
                                 in_free_dimension_subgroup, magnus_embed, series_one)
from varkit.utils.exceptions import ResourceCapError, UnsupportedDomainError

x1, x2 = Word.generator(1), Word.generator(2)


def test_generator_and_inverse():
    assert magnus_embed(x1, 1, 3).terms == {(): 1, (1,): 1}
    assert magnus_embed(x1 ** -1, 1, 3).terms == {(): 1, (1,): -1, (1, 1): 1, (1, 1, 1): -1}
    assert magnus_embed(x1 ** 2, 1, 3).terms == {(): 1, (1,): 2, (1, 1): 1}


def test_commutator_expansion():
    assert magnus_embed(commutator(x1, x2), 2, 2).terms == {(): 1, (1, 2): 1, (2, 1): -1}


def test_homomorphism(rng):
    for _ in range(200):
        u = random_word(rng, 2, rng.randint(0, 6))
        v = random_word(rng, 2, rng.randint(0, 6))
        assert magnus_embed(u * v, 2, 4) == magnus_embed(u, 2, 4) * magnus_embed(v, 2, 4)
        assert magnus_embed(u, 2, 4) * magnus_embed(u.inverse(), 2, 4) == series_one(2, 4)


def test_series_inverse(rng):
    for _ in range(20):
        w = random_word(rng, 2, rng.randint(1, 6))
        s = magnus_embed(w, 2, 5)
        assert s.inverse() == magnus_embed(w.inverse(), 2, 5)


def test_dimension_degree():
    assert dimension_degree(commutator(x1, x2), 2, 2) == DimensionDegree(2, True)
    assert str(dimension_degree(commutator(x1, x2), 2, 2)) == '2'
    unknown = dimension_degree(Word(), 2, 3)
    assert unknown == DimensionDegree(4, False)
    assert str(unknown) == '>=4'
    assert unknown.at_least(4)
    with pytest.raises(ValueError):
        unknown.at_least(5)


def test_lower_central_membership():
    c3 = left_normed_commutator([x1, x2, x2])
    assert in_free_dimension_subgroup(x1, 1)
    assert not in_free_dimension_subgroup(x1, 2)
    assert in_free_dimension_subgroup(commutator(x1, x2), 2, 2)
    assert not in_free_dimension_subgroup(commutator(x1, x2), 3, 2)
    assert in_free_dimension_subgroup(c3, 3, 2)
    assert not in_free_dimension_subgroup(c3, 4, 2)
    assert in_free_dimension_subgroup(commutator(x1, x2) * commutator(x2, x1), 6, 2)


def test_caps_and_domains():
    assert cutoff_cap(2) == 8
    with pytest.raises(ResourceCapError):
        magnus_embed(x1, 2, 9)
    with pytest.raises(ValueError):
        magnus_embed(x2, 1, 2)
    with pytest.raises(UnsupportedDomainError):
        TruncatedSeries(prime_field(2), 1, 2)
    assert magnus_embed(x1, 1, 2, RATIONALS).domain == RATIONALS


def test_format_series():
    assert format_series(magnus_embed(x1, 1, 2)) == ['1\t1', 'a1\t1']
    assert format_series(magnus_embed(commutator(x1, x2), 2, 2)) == ['1\t1', 'a1a2\t1', 'a2a1\t-1']


def test_series_arithmetic_examples():
    a1 = TruncatedSeries.letter(1, 2, 2)
    a2 = TruncatedSeries.letter(2, 2, 2)
    one = series_one(2, 2)
    assert (one + a1) * TruncatedSeries(a1.domain, 2, 2, {(): 1, (1,): -1, (1, 1): 1}) == one
    assert a1 * a2 != a2 * a1
    assert magnus_embed(Word(), 2, 3) == series_one(2, 3)


def test_dimension_degree_examples():
    assert dimension_degree(x1, 1, 2) == DimensionDegree(1, True)
    assert dimension_degree(left_normed_commutator([x1, x2, x1]), 2, 3) == DimensionDegree(3, True)
    assert in_free_dimension_subgroup(Word(), 5, 2)
