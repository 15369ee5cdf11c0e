# -*- coding: utf-8 -*-
# file: scalars.py
# time: 2026/10/17

import re
from fractions import Fraction

from sympy import isprime

from varkit.utils.exceptions import DomainMismatchError, ParseError

_INT_PATTERN = re.compile(r'^[+-]?[0-9]+$')
_RATIONAL_PATTERN = re.compile(r'^([+-]?[0-9]+)/([0-9]+)$')
_RESIDUE_PATTERN = re.compile(r'^([+-]?[0-9]+)\s+mod\s+([0-9]+)$')
_TAG_PATTERN = re.compile(r'^(?:F|Fp|GF)\s*\(?\s*([0-9]+)\s*\)?$', re.IGNORECASE)


class Domain:
    """
    Coefficient domain: the integers (kind 'Z'), the rationals (kind 'Q') or a prime field (kind 'F').

    Scalars are plain Python values: int over Z, Fraction over Q and the reduced residue
    0 <= r < p (an int) over F_p. `coerce` is the only way values enter a domain.
    """

    __slots__ = ('kind', 'p')

    def __init__(self, kind, p=None):
        if kind not in ('Z', 'Q', 'F'):
            raise ValueError('Unknown domain kind: {}'.format(kind))
        if kind == 'F':
            if p is None or p < 2 or not isprime(p):
                raise ValueError('Prime field modulus must be a prime >= 2, got {}'.format(p))
        elif p is not None:
            raise ValueError('Only prime fields carry a modulus')
        self.kind = kind
        self.p = p

    @staticmethod
    def parse(tag):
        text = str(tag).strip()
        if text in ('Z', 'ZZ'):
            return INTEGERS
        if text in ('Q', 'QQ'):
            return RATIONALS
        matched = _TAG_PATTERN.match(text)
        if matched:
            try:
                return prime_field(int(matched.group(1)))
            except ValueError as e:
                raise ParseError(str(e))
        raise ParseError('Unknown coefficient domain {!r}, expected Z, Q or F<p>'.format(tag))

    @property
    def is_field(self):
        return self.kind != 'Z'

    @property
    def characteristic(self):
        return self.p if self.kind == 'F' else 0

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def coerce(self, x):
        if isinstance(x, bool):
            x = int(x)
        if self.kind == 'Z':
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise DomainMismatchError('{} is not an integer'.format(x))
                return x.numerator
            if isinstance(x, int):
                return x
        elif self.kind == 'Q':
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
        else:
            if isinstance(x, int):
                return x % self.p
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise DomainMismatchError('{} has no image in F{}'.format(x, self.p))
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise DomainMismatchError('Cannot read {!r} as a scalar of {}'.format(x, self))

    def embeds(self, other):
        """True when scalars of `other` have a canonical image in this domain."""
        return other == self or other.kind == 'Z' or (other.kind == 'Q' and self.kind == 'Q')

    def add(self, a, b):
        return (a + b) % self.p if self.kind == 'F' else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == 'F' else a - b

    def neg(self, a):
        return -a % self.p if self.kind == 'F' else -a

    def mul(self, a, b):
        return a * b % self.p if self.kind == 'F' else a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError('zero has no inverse in {}'.format(self))
        if self.kind == 'F':
            return pow(a, -1, self.p)
        if self.kind == 'Q':
            return 1 / a
        if a in (1, -1):
            return a
        raise DomainMismatchError('{} is not a unit of Z'.format(a))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse_scalar(self, text):
        text = text.strip()
        if _INT_PATTERN.match(text):
            return self.coerce(int(text))
        matched = _RATIONAL_PATTERN.match(text)
        if matched:
            if int(matched.group(2)) == 0:
                raise ParseError('Zero denominator in {!r}'.format(text))
            return self.coerce(Fraction(int(matched.group(1)), int(matched.group(2))))
        matched = _RESIDUE_PATTERN.match(text)
        if matched:
            if self.kind != 'F' or int(matched.group(2)) != self.p:
                raise ParseError('{!r} is not an element of {}'.format(text, self))
            return self.coerce(int(matched.group(1)))
        raise ParseError('Invalid scalar {!r}'.format(text))

    def format_scalar(self, x, with_modulus=False):
        if self.kind == 'Q':
            return str(x.numerator) if x.denominator == 1 else '{}/{}'.format(x.numerator, x.denominator)
        if self.kind == 'F' and with_modulus:
            return '{} mod {}'.format(x, self.p)
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Domain) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __str__(self):
        return 'F{}'.format(self.p) if self.kind == 'F' else self.kind

    def __repr__(self):
        return 'Domain({})'.format(self)


INTEGERS = Domain('Z')
RATIONALS = Domain('Q')


def prime_field(p):
    return Domain('F', int(p))


def require_same_domain(*domains):
    first = domains[0]
    for other in domains[1:]:
        if other != first:
            raise DomainMismatchError('Domain mismatch: {} vs {}'.format(first, other))
    return first
