# -*- coding: utf-8 -*-
# file: series.py
# time: 2026/10/17

import logging
from collections import namedtuple
from math import comb

from varkit.tasks.exact.scalars import INTEGERS
from varkit.utils.exceptions import DimensionMismatchError, UnsupportedDomainError
from varkit.utils.varkit_utils import check_cap, resolve_config

logger = logging.getLogger(__name__)


class TruncatedSeries:
    """
    Noncommutative power series in a_1..a_k over Z or Q with every monomial of degree > cutoff
    discarded. Monomials are tuples of letter indices; () is the constant term.
    """

    __slots__ = ('domain', 'letters', 'cutoff', 'terms')

    def __init__(self, domain, letters, cutoff, terms=None):
        if domain.kind == 'F':
            raise UnsupportedDomainError('Truncated series are computed over Z or Q, not {}'.format(domain))
        if letters < 1 or cutoff < 1:
            raise ValueError('Need at least one letter and cutoff >= 1, got k={}, d={}'.format(letters, cutoff))
        self.domain = domain
        self.letters = letters
        self.cutoff = cutoff
        cleaned = {}
        for monomial, coeff in (terms or {}).items():
            if len(monomial) > cutoff:
                continue
            if any(not 1 <= letter <= letters for letter in monomial):
                raise ValueError('Monomial {} uses a letter outside a1..a{}'.format(monomial, letters))
            coeff = domain.coerce(coeff)
            if coeff != 0:
                cleaned[tuple(monomial)] = coeff
        self.terms = cleaned

    @classmethod
    def one(cls, letters, cutoff, domain=INTEGERS):
        return cls(domain, letters, cutoff, {(): 1})

    @classmethod
    def letter(cls, index, letters, cutoff, domain=INTEGERS):
        return cls(domain, letters, cutoff, {(index,): 1})

    def _check_compatible(self, other):
        if (self.domain, self.letters, self.cutoff) != (other.domain, other.letters, other.cutoff):
            raise DimensionMismatchError('Series parameters differ: ({}, k={}, d={}) vs ({}, k={}, d={})'.format(
                self.domain, self.letters, self.cutoff, other.domain, other.letters, other.cutoff))

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + coeff
        return TruncatedSeries(self.domain, self.letters, self.cutoff, terms)

    def __sub__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) - coeff
        return TruncatedSeries(self.domain, self.letters, self.cutoff, terms)

    def __mul__(self, other):
        self._check_compatible(other)
        cutoff = self.cutoff
        terms = {}
        by_degree = sorted(other.terms.items(), key=lambda item: len(item[0]))
        for m1, c1 in self.terms.items():
            room = cutoff - len(m1)
            for m2, c2 in by_degree:
                if len(m2) > room:
                    break
                monomial = m1 + m2
                terms[monomial] = terms.get(monomial, 0) + c1 * c2
        return TruncatedSeries(self.domain, self.letters, cutoff, terms)

    def constant_term(self):
        return self.terms.get((), self.domain.zero)

    def inverse(self):
        """Inverse of a series with constant term 1: sum_j (1 - s)^j."""
        if self.constant_term() != 1:
            raise ValueError('Only series with constant term 1 are inverted here')
        one = TruncatedSeries.one(self.letters, self.cutoff, self.domain)
        nilpotent = one - self
        result, power = one, one
        for _ in range(self.cutoff):
            power = power * nilpotent
            result = result + power
        return result

    def degree_of_difference_from_one(self):
        """Smallest degree of a nonzero term of s - 1, or None when s = 1 through the cutoff."""
        difference = self - TruncatedSeries.one(self.letters, self.cutoff, self.domain)
        return min((len(m) for m in difference.terms), default=None)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries) and self.domain == other.domain
                and self.letters == other.letters and self.cutoff == other.cutoff and self.terms == other.terms)

    def __hash__(self):
        return hash((self.domain, self.letters, self.cutoff, frozenset(self.terms.items())))

    def __repr__(self):
        return 'TruncatedSeries(k={}, d={}, {} terms)'.format(self.letters, self.cutoff, len(self.terms))


class DimensionDegree(namedtuple('DimensionDegree', ['value', 'exact'])):
    """Degree of the first nonzero term of magnus(w) - 1; when not exact, `value` is cutoff + 1, a lower bound."""

    def at_least(self, n):
        if not self.exact and n > self.value:
            raise ValueError('Degree is only known to be >= {}; raise the cutoff to decide >= {}'.format(
                self.value, n))
        return self.value >= n

    def __str__(self):
        return str(self.value) if self.exact else '>={}'.format(self.value)


def series_multiply(a, b):
    return a * b


def series_add(a, b):
    return a + b


def series_subtract(a, b):
    return a - b


def series_one(letters, cutoff, domain=INTEGERS):
    return TruncatedSeries.one(letters, cutoff, domain)


def series_inverse(s):
    return s.inverse()


def cutoff_cap(letters, config=None):
    config = resolve_config(config)
    caps = config.magnus_cutoff_caps
    if letters in caps:
        return caps[letters]
    cutoff, total, width = 0, 1, 1
    while True:
        width *= letters
        if total + width > config.max_series_terms:
            return max(cutoff, 1)
        total += width
        cutoff += 1


def _syllable_series(gen, exp, letters, cutoff, domain):
    # (1 + a)^e, with the binomial series for negative e
    if exp > 0:
        terms = {(gen,) * j: comb(exp, j) for j in range(min(exp, cutoff) + 1)}
    else:
        m = -exp
        terms = {(gen,) * j: (-1) ** j * comb(m + j - 1, j) for j in range(cutoff + 1)}
    return TruncatedSeries(domain, letters, cutoff, terms)


def magnus_embed(w, letters, cutoff, domain=INTEGERS, config=None):
    """Image of w under x_i -> 1 + a_i, truncated at `cutoff`."""
    check_cap('Magnus cutoff for {} letters'.format(letters), cutoff, cutoff_cap(letters, config))
    if w.generators() and w.generators()[-1] > letters:
        raise ValueError('Word {} uses generator x{} but only {} letters are available'.format(
            w, w.generators()[-1], letters))
    result = TruncatedSeries.one(letters, cutoff, domain)
    for gen, exp in w.syllables:
        result = result * _syllable_series(gen, exp, letters, cutoff, domain)
    return result


def dimension_degree(w, letters, cutoff, config=None):
    degree = magnus_embed(w, letters, cutoff, config=config).degree_of_difference_from_one()
    if degree is None:
        return DimensionDegree(cutoff + 1, False)
    return DimensionDegree(degree, True)


def in_free_dimension_subgroup(w, n, letters=None, config=None):
    """
    w in D_n(Z, F) = gamma_n(F): all terms of degree 1..n-1 of magnus(w) - 1 vanish.
    """
    if n < 1:
        raise ValueError('n must be positive, got {}'.format(n))
    if n == 1:
        return True
    if letters is None:
        letters = max(w.generators(), default=1)
    return dimension_degree(w, letters, n - 1, config).at_least(n)


def format_series(s):
    lines = []
    for monomial in sorted(s.terms, key=lambda m: (len(m), m)):
        name = ''.join('a{}'.format(letter) for letter in monomial) if monomial else '1'
        lines.append('{}\t{}'.format(name, s.domain.format_scalar(s.terms[monomial])))
    return lines
