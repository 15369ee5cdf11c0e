# -*- coding: utf-8 -*-
# file: words.py
# time: 2026/10/17

import re
from functools import reduce

from varkit.utils.exceptions import ParseError


class Word:
    """
    Freely reduced element of the free group F(x1, x2, ...).

    Stored as syllables (generator index >= 1, nonzero exponent) with distinct adjacent
    generators; the empty tuple is the identity.
    """

    __slots__ = ('syllables', '_hash')

    def __init__(self, syllables=()):
        stack = []
        for gen, exp in syllables:
            if not isinstance(gen, int) or gen < 1:
                raise ValueError('Generator indices start at 1, got {!r}'.format(gen))
            if not isinstance(exp, int):
                raise ValueError('Exponents are integers, got {!r}'.format(exp))
            if stack and stack[-1][0] == gen:
                exp += stack.pop()[1]
            if exp:
                stack.append((gen, exp))
        self.syllables = tuple(stack)
        self._hash = None

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def generator(cls, index, exponent=1):
        return cls(((index, exponent),))

    @classmethod
    def from_letters(cls, letters):
        """Signed letters: +i is x_i, -i is x_i^-1."""
        return cls((abs(letter), 1 if letter > 0 else -1) for letter in letters)

    def letters(self):
        return tuple(gen if exp > 0 else -gen for gen, exp in self.syllables for _ in range(abs(exp)))

    def is_identity(self):
        return not self.syllables

    def generators(self):
        return sorted({gen for gen, _ in self.syllables})

    def __len__(self):
        return sum(abs(exp) for _, exp in self.syllables)

    def __mul__(self, other):
        return Word(self.syllables + other.syllables)

    def inverse(self):
        return Word((gen, -exp) for gen, exp in reversed(self.syllables))

    def __invert__(self):
        return self.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        result, base = Word(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def sort_key(self):
        # shortlex: length first, then x1 < x1^-1 < x2 < ...
        return len(self), tuple((abs(letter), letter < 0) for letter in self.letters())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.syllables)
        return self._hash

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return 'Word({})'.format(format_word(self))


def multiply(a, b):
    return a * b


def inverse(a):
    return a.inverse()


def power(w, exponent):
    return w ** exponent


def commutator(a, b):
    """[a, b] = a^-1 b^-1 a b."""
    return a.inverse() * b.inverse() * a * b


def left_normed_commutator(words):
    """[[..[w1, w2], w3].., wk]."""
    words = list(words)
    if not words:
        raise ValueError('left_normed_commutator needs at least one word')
    return reduce(commutator, words)


def substitute(w, images):
    """Image of w under the endomorphism x_i -> images[i]."""
    result = Word()
    for gen, exp in w.syllables:
        if gen not in images:
            raise ValueError('No image given for generator x{}'.format(gen))
        result = result * images[gen] ** exp
    return result


def random_word(rng, letters, length):
    """Reduced word obtained from `length` uniformly drawn letters over x1..x_letters."""
    return Word.from_letters(rng.choice((1, -1)) * rng.randint(1, letters) for _ in range(length))


def format_word(w):
    if w.is_identity():
        return '1'
    return ' '.join('x{}'.format(gen) if exp == 1 else 'x{}^{}'.format(gen, exp) for gen, exp in w.syllables)


_WORD_TOKEN = re.compile(r'\s*(?:(?P<gen>[xy])(?P<index>[0-9]+)|(?P<comm>comm)\s*\(|(?P<one>1)(?![0-9/])'
                         r'|(?P<punct>[,)^]))')
_EXPONENT = re.compile(r'\s*([+-]?[0-9]+)')


class _WordParser:

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        return ParseError('{} at position {} in {!r}'.format(message, self.pos, self.text))

    def at_end(self):
        return not self.text[self.pos:].strip()

    def peek(self):
        return _WORD_TOKEN.match(self.text, self.pos)

    def exponent(self):
        matched = self.peek()
        if matched and matched.group('punct') == '^':
            self.pos = matched.end()
            exp = _EXPONENT.match(self.text, self.pos)
            if not exp:
                raise self.error('Expected an integer exponent')
            self.pos = exp.end()
            return int(exp.group(1))
        return 1

    def product(self, stop_on=()):
        result = Word()
        while not self.at_end():
            matched = self.peek()
            if matched is None:
                raise self.error('Unexpected character')
            if matched.group('punct') in stop_on:
                break
            self.pos = matched.end()
            if matched.group('gen'):
                index = int(matched.group('index'))
                if index < 1:
                    raise self.error('Generator indices start at 1')
                factor = Word.generator(index)
            elif matched.group('comm'):
                first = self.product(stop_on=(',',))
                self.expect(',')
                second = self.product(stop_on=(')',))
                self.expect(')')
                factor = commutator(first, second)
            elif matched.group('one'):
                factor = Word()
            else:
                raise self.error('Unexpected {!r}'.format(matched.group('punct')))
            result = result * factor ** self.exponent()
        return result

    def expect(self, punct):
        matched = self.peek()
        if not matched or matched.group('punct') != punct:
            raise self.error('Expected {!r}'.format(punct))
        self.pos = matched.end()


def parse_word(text):
    """
    Words are products of terms `x<i>` (or `y<i>`) with an optional `^<int>`, the macro
    `comm(w1,w2)` for the commutator, and `1` for the identity, e.g. `x1 x2^-1 comm(x1,x2)`.
    """
    parser = _WordParser(text)
    word = parser.product()
    if not parser.at_end():
        raise parser.error('Trailing input')
    return word
