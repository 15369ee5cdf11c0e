# -*- coding: utf-8 -*-
# file: group_algebra.py
# time: 2026/10/17

import re

from varkit.tasks.exact.scalars import INTEGERS, RATIONALS, require_same_domain
from varkit.tasks.freegrp.words import Word, commutator, substitute
from varkit.utils.exceptions import DomainMismatchError, ParseError


class GroupAlgebraElement:
    """Finitely supported K-linear combination of free-group words; no zero coefficients are stored."""

    __slots__ = ('domain', 'terms', '_hash')

    def __init__(self, domain, terms=None):
        self.domain = domain
        cleaned = {}
        for word, coeff in (terms or {}).items():
            coeff = domain.coerce(coeff)
            if coeff != 0:
                cleaned[word] = coeff
        self.terms = cleaned
        self._hash = None

    @classmethod
    def zero(cls, domain=INTEGERS):
        return cls(domain)

    @classmethod
    def one(cls, domain=INTEGERS):
        return cls(domain, {Word(): 1})

    @classmethod
    def from_word(cls, word, domain=INTEGERS, coeff=1):
        return cls(domain, {word: coeff})

    @classmethod
    def generator_minus_one(cls, index, domain=INTEGERS):
        return cls(domain, {Word.generator(index): 1, Word(): -1})

    def support(self):
        return sorted(self.terms)

    def items(self):
        return [(word, self.terms[word]) for word in self.support()]

    def coefficient(self, word):
        return self.terms.get(word, self.domain.zero)

    def is_zero(self):
        return not self.terms

    def variables(self):
        return sorted({gen for word in self.terms for gen in word.generators()})

    def change_domain(self, domain):
        if not domain.embeds(self.domain):
            raise DomainMismatchError('Cannot move an element over {} to {}'.format(self.domain, domain))
        return GroupAlgebraElement(domain, self.terms)

    def _combine(self, other, sign):
        domain = require_same_domain(self.domain, other.domain)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = domain.add(terms.get(word, domain.zero), coeff if sign > 0 else domain.neg(coeff))
        return GroupAlgebraElement(domain, terms)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, value):
        value = self.domain.coerce(value)
        return GroupAlgebraElement(self.domain, {w: self.domain.mul(value, c) for w, c in self.terms.items()})

    def __mul__(self, other):
        domain = require_same_domain(self.domain, other.domain)
        terms = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u * v
                terms[w] = domain.add(terms.get(w, domain.zero), domain.mul(a, b))
        return GroupAlgebraElement(domain, terms)

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError('Only non-negative powers of group algebra elements are defined')
        result = GroupAlgebraElement.one(self.domain)
        for _ in range(exponent):
            result = result * self
        return result

    def substitute(self, images):
        terms = {}
        for word, coeff in self.terms.items():
            image = substitute(word, images)
            terms[image] = self.domain.add(terms.get(image, self.domain.zero), coeff)
        return GroupAlgebraElement(self.domain, terms)

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.domain == other.domain and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.domain, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return 'GroupAlgebraElement({}, {})'.format(self.domain, format_element(self))


def add(u, v):
    return u + v


def scale(u, value):
    return u.scale(value)


def multiply(u, v):
    return u * v


def augmentation(u):
    """Sum of coefficients; a ring homomorphism KF -> K."""
    total = u.domain.zero
    for coeff in u.terms.values():
        total = u.domain.add(total, coeff)
    return total


def s_n_identity_element(n, domain=INTEGERS):
    """(y1 - 1)(y2 - 1)...(yn - 1), the identity of representations with a length-n trivial-factor series."""
    if n < 1:
        raise ValueError('n must be positive, got {}'.format(n))
    result = GroupAlgebraElement.one(domain)
    for i in range(1, n + 1):
        result = result * GroupAlgebraElement.generator_minus_one(i, domain)
    return result


def power_identity_element(n, domain=INTEGERS):
    """(y1 - 1)^n."""
    if n < 1:
        raise ValueError('n must be positive, got {}'.format(n))
    return GroupAlgebraElement.generator_minus_one(1, domain) ** n


def abelian_power_identity_element(n, domain=INTEGERS):
    """([y1,y2] - 1)([y3,y4] - 1)...([y_{2n-1},y_{2n}] - 1)."""
    if n < 1:
        raise ValueError('n must be positive, got {}'.format(n))
    result = GroupAlgebraElement.one(domain)
    for i in range(1, n + 1):
        c = commutator(Word.generator(2 * i - 1), Word.generator(2 * i))
        result = result * GroupAlgebraElement(domain, {c: 1, Word(): -1})
    return result


def product_identity_element(u_top, u_bottom):
    """
    u_top * u_bottom' where u_bottom' uses fresh variables. When the quotient V/W satisfies u_top
    and the submodule W satisfies u_bottom, V satisfies the product.
    """
    domain = require_same_domain(u_top.domain, u_bottom.domain)
    shift = max(u_top.variables(), default=0)
    images = {gen: Word.generator(gen + shift) for gen in u_bottom.variables()}
    return u_top * u_bottom.substitute(images).change_domain(domain)


def _format_word_compact(word):
    return ''.join('x{}'.format(g) if e == 1 else 'x{}^{}'.format(g, e) for g, e in word.syllables)


def format_element(u):
    if u.is_zero():
        return '0'
    fmt = u.domain.format_scalar
    pieces = []
    for word in sorted(u.terms, key=lambda w: (-len(w), w.sort_key()[1])):
        coeff = u.terms[word]
        negative = u.domain.kind != 'F' and coeff < 0
        magnitude = -coeff if negative else coeff
        if word.is_identity():
            body = fmt(magnitude)
        elif magnitude == 1:
            body = _format_word_compact(word)
        else:
            body = '{}*{}'.format(fmt(magnitude), _format_word_compact(word))
        if not pieces:
            pieces.append('-' + body if negative else body)
        else:
            pieces.append(('- ' if negative else '+ ') + body)
    return ' '.join(pieces)


_ELEMENT_TOKEN = re.compile(r'\s*(?:(?P<number>[0-9]+(?:/[0-9]+)?)|(?P<gen>[xy])(?P<index>[0-9]+)'
                            r'|(?P<comm>comm)\s*\(|(?P<punct>[-+*^(),]))')
_EXPONENT = re.compile(r'\s*([+-]?[0-9]+)')


class _ElementParser:

    def __init__(self, text, domain):
        self.text = text
        self.domain = domain
        self.pos = 0

    def error(self, message):
        return ParseError('{} at position {} in {!r}'.format(message, self.pos, self.text))

    def peek(self):
        if not self.text[self.pos:].strip():
            return None
        matched = _ELEMENT_TOKEN.match(self.text, self.pos)
        if matched is None:
            raise self.error('Unexpected character')
        return matched

    def take(self, punct):
        matched = self.peek()
        if matched is not None and matched.group('punct') == punct:
            self.pos = matched.end()
            return True
        return False

    def expression(self):
        negative = False
        if self.take('-'):
            negative = True
        else:
            self.take('+')
        result = self.term()
        if negative:
            result = -result
        while True:
            if self.take('+'):
                result = result + self.term()
            elif self.take('-'):
                result = result - self.term()
            else:
                return result

    def term(self):
        result = self.factor()
        while True:
            matched = self.peek()
            if matched is None:
                return result
            if matched.group('punct') == '*':
                self.pos = matched.end()
                result = result * self.factor()
            elif matched.group('punct') in ('(',) or matched.group('gen') or matched.group('comm') \
                    or matched.group('number'):
                result = result * self.factor()
            else:
                return result

    def exponent(self):
        if not self.take('^'):
            return None
        matched = _EXPONENT.match(self.text, self.pos)
        if not matched:
            raise self.error('Expected an integer exponent')
        self.pos = matched.end()
        return int(matched.group(1))

    def factor(self):
        matched = self.peek()
        if matched is None:
            raise self.error('Unexpected end of input')
        self.pos = matched.end()
        if matched.group('number'):
            value = GroupAlgebraElement(self.domain, {Word(): self.domain.parse_scalar(matched.group('number'))})
        elif matched.group('gen'):
            index = int(matched.group('index'))
            if index < 1:
                raise self.error('Generator indices start at 1')
            value = GroupAlgebraElement.from_word(Word.generator(index), self.domain)
        elif matched.group('comm'):
            first = self.group_element(self.expression())
            if not self.take(','):
                raise self.error("Expected ','")
            second = self.group_element(self.expression())
            if not self.take(')'):
                raise self.error("Expected ')'")
            value = GroupAlgebraElement.from_word(commutator(first, second), self.domain)
        elif matched.group('punct') == '(':
            value = self.expression()
            if not self.take(')'):
                raise self.error("Expected ')'")
        else:
            raise self.error('Unexpected {!r}'.format(matched.group('punct')))
        exponent = self.exponent()
        if exponent is None:
            return value
        if exponent < 0:
            word = self.group_element(value)
            return GroupAlgebraElement.from_word(word ** exponent, self.domain)
        if len(value.terms) == 1 and value.coefficient(next(iter(value.terms))) == self.domain.one:
            return GroupAlgebraElement.from_word(next(iter(value.terms)) ** exponent, self.domain)
        return value ** exponent

    def group_element(self, value):
        if len(value.terms) != 1 or next(iter(value.terms.values())) != self.domain.one:
            raise self.error('Expected a group element, got {}'.format(format_element(value)))
        return next(iter(value.terms))


def parse_element(text, domain=RATIONALS):
    """
    Parse `3*x1x2 - 1/2*x2^-1 + 1`, `(y1-1)(y2-1)` or `(y1-1)^3`; `1` alone is the identity word,
    `y<i>` is a synonym for `x<i>` and `comm(a,b)` is the commutator a^-1 b^-1 a b.
    """
    if not text.strip():
        raise ParseError('Empty group algebra element')
    parser = _ElementParser(text, domain)
    value = parser.expression()
    if parser.peek() is not None:
        raise parser.error('Trailing input')
    return value
