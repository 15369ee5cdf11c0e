# -*- coding: utf-8 -*-
# file: polynomial.py
# time: 2026/10/17

import re
from itertools import permutations

from sympy.combinatorics import Permutation

from varkit.tasks.exact.matrix import DenseMatrix
from varkit.tasks.exact.scalars import RATIONALS, require_same_domain
from varkit.utils.exceptions import DimensionMismatchError, DomainMismatchError, ParseError, UnsupportedDomainError


class NCPolynomial:
    """
    Element of the free associative algebra over a domain: monomial (tuple of variable
    indices >= 1, () for the unit) -> nonzero coefficient.
    """

    __slots__ = ('domain', 'terms', '_hash')

    def __init__(self, domain=RATIONALS, terms=None):
        self.domain = domain
        cleaned = {}
        for monomial, coeff in (terms or {}).items():
            monomial = tuple(monomial)
            if any(not isinstance(v, int) or v < 1 for v in monomial):
                raise ValueError('Variable indices start at 1, got monomial {}'.format(monomial))
            coeff = domain.coerce(coeff)
            if coeff != 0:
                cleaned[monomial] = domain.add(cleaned.get(monomial, domain.zero), coeff)
                if cleaned[monomial] == 0:
                    del cleaned[monomial]
        self.terms = cleaned
        self._hash = None

    @classmethod
    def variable(cls, index, domain=RATIONALS):
        return cls(domain, {(index,): 1})

    @classmethod
    def constant(cls, value, domain=RATIONALS):
        return cls(domain, {(): value})

    def is_zero(self):
        return not self.terms

    def variables(self):
        return sorted({v for monomial in self.terms for v in monomial})

    def degree(self):
        return max((len(m) for m in self.terms), default=-1)

    def degrees_in(self, monomial):
        counts = {}
        for v in monomial:
            counts[v] = counts.get(v, 0) + 1
        return counts

    def is_multilinear(self):
        """Every monomial is an arrangement of one common set of distinct variables."""
        if not self.terms:
            return True
        shapes = {tuple(sorted(m)) for m in self.terms}
        if len(shapes) != 1:
            return False
        shape = next(iter(shapes))
        return len(set(shape)) == len(shape)

    def homogeneous_components(self):
        """Multihomogeneous components keyed by the sorted multiset of variables."""
        components = {}
        for monomial, coeff in self.terms.items():
            components.setdefault(tuple(sorted(monomial)), {})[monomial] = coeff
        return [NCPolynomial(self.domain, components[key]) for key in sorted(components)]

    def _combine(self, other, sign):
        domain = require_same_domain(self.domain, other.domain)
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            value = coeff if sign > 0 else domain.neg(coeff)
            terms[monomial] = domain.add(terms.get(monomial, domain.zero), value)
        return NCPolynomial(domain, terms)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, value):
        value = self.domain.coerce(value)
        return NCPolynomial(self.domain, {m: self.domain.mul(value, c) for m, c in self.terms.items()})

    def __mul__(self, other):
        domain = require_same_domain(self.domain, other.domain)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                monomial = m1 + m2
                terms[monomial] = domain.add(terms.get(monomial, domain.zero), domain.mul(c1, c2))
        return NCPolynomial(domain, terms)

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError('Polynomials only have non-negative powers')
        result = NCPolynomial.constant(1, self.domain)
        for _ in range(exponent):
            result = result * self
        return result

    def rename(self, mapping):
        """Variable renaming x_i -> x_mapping[i]; unmapped variables stay."""
        return NCPolynomial(self.domain, {tuple(mapping.get(v, v) for v in m): c for m, c in self.terms.items()})

    def substitute(self, images):
        """Image under x_i -> images[i] (an NCPolynomial); unmapped variables stay."""
        result = NCPolynomial(self.domain)
        for monomial, coeff in self.terms.items():
            term = NCPolynomial.constant(coeff, self.domain)
            for v in monomial:
                term = term * images.get(v, NCPolynomial.variable(v, self.domain))
            result = result + term
        return result

    def change_domain(self, domain):
        if not domain.embeds(self.domain):
            raise DomainMismatchError('Cannot move a polynomial over {} to {}'.format(self.domain, domain))
        return NCPolynomial(domain, self.terms)

    def __eq__(self, other):
        return isinstance(other, NCPolynomial) and self.domain == other.domain and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.domain, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return 'NCPolynomial({}, {})'.format(self.domain, format_polynomial(self))


def permutation_sign(perm):
    """Sign of a permutation given as a sequence of 1..n."""
    return Permutation([v - 1 for v in perm]).signature()


def standard_polynomial(m, domain=RATIONALS):
    """s_m = sum over S_m of sgn(sigma) x_sigma(1) ... x_sigma(m)."""
    if m < 1:
        raise ValueError('Standard polynomials start at m = 1, got {}'.format(m))
    return NCPolynomial(domain, {perm: permutation_sign(perm) for perm in permutations(range(1, m + 1))})


def evaluate(f, assignment):
    """Matrix value of f with x_i -> assignment[i]."""
    variables = f.variables()
    missing = [v for v in variables if v not in assignment]
    if missing:
        raise ValueError('No matrix assigned to x{}'.format(missing[0]))
    if not assignment:
        raise ValueError('Cannot evaluate without at least one matrix to fix the size')
    matrices = list(assignment.values())
    size = matrices[0].rows
    # coefficients are read into the matrices' field, so rational polynomials evaluate over F_p
    domain = require_same_domain(*(a.domain for a in matrices))
    if f.domain.kind == 'F' and f.domain != domain:
        raise DomainMismatchError('Polynomial over {} cannot be evaluated over {}'.format(f.domain, domain))
    for a in matrices:
        if a.shape != (size, size):
            raise DimensionMismatchError('Assigned matrices must all be {0}x{0}, got {1}'.format(size, a.shape))
    identity = DenseMatrix.identity(domain, size)
    result = DenseMatrix.zero(domain, size)
    for monomial, coeff in f.terms.items():
        product = identity
        for v in monomial:
            product = product @ assignment[v]
        result = result + product.scale(domain.coerce(coeff))
    return result


def multilinearize(f):
    """
    Full polarization in characteristic 0: each multihomogeneous component is linearized one
    repeated variable at a time (x_i -> x_i + x_new, keep the part linear in x_new).
    """
    if f.domain.characteristic != 0:
        raise UnsupportedDomainError('Multilinearization needs characteristic 0, got {}'.format(f.domain))
    if f.is_multilinear():
        return [f] if not f.is_zero() else []
    results = []
    for component in f.homogeneous_components():
        g = component
        while not g.is_multilinear():
            shape = next(iter(g.terms))
            counts = g.degrees_in(shape)
            repeated = min(v for v, c in counts.items() if c > 1)
            fresh = max(g.variables()) + 1
            g = _linear_part(g, repeated, fresh)
            if g.is_zero():
                break
        if not g.is_zero():
            results.append(g)
    return results


def _linear_part(g, variable, fresh):
    # terms of g(x_variable + x_fresh) that contain x_fresh exactly once
    terms = {}
    for monomial, coeff in g.terms.items():
        positions = [i for i, v in enumerate(monomial) if v == variable]
        for i in positions:
            replaced = monomial[:i] + (fresh,) + monomial[i + 1:]
            terms[replaced] = g.domain.add(terms.get(replaced, g.domain.zero), coeff)
    return NCPolynomial(g.domain, terms)


def format_polynomial(f):
    if f.is_zero():
        return '0'
    fmt = f.domain.format_scalar
    pieces = []
    for monomial in sorted(f.terms, key=lambda m: (len(m), m)):
        coeff = f.terms[monomial]
        negative = f.domain.kind != 'F' and coeff < 0
        magnitude = -coeff if negative else coeff
        body = '*'.join('x{}'.format(v) for v in monomial)
        if not monomial:
            body = fmt(magnitude)
        elif magnitude != 1:
            body = '{}*{}'.format(fmt(magnitude), body)
        if not pieces:
            pieces.append('-' + body if negative else body)
        else:
            pieces.append(('- ' if negative else '+ ') + body)
    return ' '.join(pieces)


_POLY_TOKEN = re.compile(r'\s*(?:(?P<number>[0-9]+(?:/[0-9]+)?)|(?P<var>[xy])(?P<index>[0-9]+)'
                         r'|(?P<punct>[-+*^()]))')
_EXPONENT = re.compile(r'\s*([0-9]+)')


class _PolynomialParser:

    def __init__(self, text, domain):
        self.text = text
        self.domain = domain
        self.pos = 0

    def error(self, message):
        return ParseError('{} at position {} in {!r}'.format(message, self.pos, self.text))

    def peek(self):
        if not self.text[self.pos:].strip():
            return None
        matched = _POLY_TOKEN.match(self.text, self.pos)
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
        negative = self.take('-')
        if not negative:
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
        while self.take('*'):
            result = result * self.factor()
        matched = self.peek()
        if matched is not None and (matched.group('var') or matched.group('number')
                                    or matched.group('punct') == '('):
            raise self.error("Expected '*' between factors")
        return result

    def factor(self):
        matched = self.peek()
        if matched is None:
            raise self.error('Unexpected end of input')
        self.pos = matched.end()
        if matched.group('number'):
            value = NCPolynomial.constant(self.domain.parse_scalar(matched.group('number')), self.domain)
        elif matched.group('var'):
            index = int(matched.group('index'))
            if index < 1:
                raise self.error('Variable indices start at 1')
            value = NCPolynomial.variable(index, self.domain)
        elif matched.group('punct') == '(':
            value = self.expression()
            if not self.take(')'):
                raise self.error("Expected ')'")
        else:
            raise self.error('Unexpected {!r}'.format(matched.group('punct')))
        if self.take('^'):
            exponent = _EXPONENT.match(self.text, self.pos)
            if not exponent:
                raise self.error('Expected a non-negative integer exponent')
            self.pos = exponent.end()
            value = value ** int(exponent.group(1))
        return value


def parse_polynomial(text, domain=RATIONALS):
    """Parse `x1*x2 - x2*x1`, `1/2*x1*x1`, `(x1*x2 - x2*x1)*x3` or `x1^2*x2`; `*` is required."""
    if not text.strip():
        raise ParseError('Empty polynomial')
    parser = _PolynomialParser(text, domain)
    value = parser.expression()
    if parser.peek() is not None:
        raise parser.error('Trailing input')
    return value
