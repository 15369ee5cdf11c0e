# -*- coding: utf-8 -*-
# file: rep_file.py
# time: 2026/10/17

"""
Text files for representations and algebras, one `key=value` per line, `#` starts a comment:

    kind=matrix          kind=perm            kind=algebra
    field=F3             field=Q              field=Q
    dim=2                degree=3             dim=2
    gen=1 1; 0 1         gen=(1 2)            basis=1 0; 0 0
                         gen=(1 2 3)          basis=0 1; 0 0

Matrices are written row by row with `;` between rows; permutations in 1-based cycle notation,
`()` for the identity. Permutations act on the right: e_i * P = e_(i^P).
"""

import os

from sympy.combinatorics import Permutation

from varkit.tasks.exact.matrix import DenseMatrix
from varkit.tasks.exact.scalars import Domain, RATIONALS
from varkit.tasks.matrep.representation import MatrixRepresentation, permutation_representation
from varkit.utils.exceptions import ParseError


def _read_text(source):
    if os.path.isfile(source):
        with open(source, 'r', encoding='utf-8') as fin:
            return fin.read()
    return source


def _parse_fields(text):
    fields = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ParseError('Line {}: expected key=value, got {!r}'.format(number, line))
        key, value = (part.strip() for part in line.split('=', 1))
        fields.append((number, key, value))
    return fields


def _single(fields, key, default=None):
    values = [(number, value) for number, k, value in fields if k == key]
    if len(values) > 1:
        raise ParseError('Line {}: duplicate {!r}'.format(values[1][0], key))
    if not values:
        if default is None:
            raise ParseError('Missing {!r}'.format(key))
        return default
    return values[0][1]


def _positive(text, key):
    try:
        value = int(text)
    except ValueError:
        raise ParseError('{} must be an integer, got {!r}'.format(key, text))
    if value < 1:
        raise ParseError('{} must be positive, got {}'.format(key, value))
    return value


def parse_matrix(text, domain, dim, where=''):
    rows = [row.split() for row in text.split(';')]
    if len(rows) != dim or any(len(row) != dim for row in rows):
        raise ParseError('{}expected a {}x{} matrix, got {!r}'.format(where, dim, dim, text))
    return DenseMatrix(domain, [[domain.parse_scalar(x) for x in row] for row in rows])


def parse_cycles(text, degree, where=''):
    """1-based cycle notation `(1 2)(3 4 5)` -> 0-based image list."""
    text = text.strip()
    if not text.startswith('(') or not text.endswith(')'):
        raise ParseError('{}expected cycles like (1 2)(3 4), got {!r}'.format(where, text))
    cycles = []
    for chunk in text[1:-1].split(')'):
        chunk = chunk.strip().lstrip('(').replace(',', ' ')
        if not chunk:
            continue
        try:
            cycle = [int(x) - 1 for x in chunk.split()]
        except ValueError:
            raise ParseError('{}invalid cycle {!r}'.format(where, chunk))
        if any(not 0 <= x < degree for x in cycle) or len(set(cycle)) != len(cycle):
            raise ParseError('{}cycle {!r} is not a cycle on 1..{}'.format(where, chunk, degree))
        cycles.append(cycle)
    return Permutation(cycles, size=degree).array_form


def read_representation(source):
    """Representation from a file path or file text (kind=matrix or kind=perm)."""
    fields = _parse_fields(_read_text(source))
    kind = _single(fields, 'kind')
    if kind not in ('matrix', 'perm'):
        raise ParseError('Expected kind=matrix or kind=perm, got kind={}'.format(kind))
    domain = Domain.parse(_single(fields, 'field', 'Q'))
    gens = [(number, value) for number, key, value in fields if key == 'gen']
    unknown = [(number, key) for number, key, _ in fields if key not in ('kind', 'field', 'dim', 'degree', 'gen',
                                                                        'name')]
    if unknown:
        raise ParseError('Line {}: unknown key {!r}'.format(*unknown[0]))
    if kind == 'matrix':
        dim = _positive(_single(fields, 'dim'), 'dim')
        generators = [parse_matrix(value, domain, dim, 'Line {}: '.format(number)) for number, value in gens]
        try:
            return MatrixRepresentation(domain, dim, generators)
        except ValueError as e:
            raise ParseError(str(e))
    degree = _positive(_single(fields, 'degree'), 'degree')
    permutations = [parse_cycles(value, degree, 'Line {}: '.format(number)) for number, value in gens]
    return permutation_representation(degree, permutations, domain)


def read_algebra(source):
    """Basis matrices of an algebra file (kind=algebra)."""
    fields = _parse_fields(_read_text(source))
    kind = _single(fields, 'kind')
    if kind != 'algebra':
        raise ParseError('Expected kind=algebra, got kind={}'.format(kind))
    domain = Domain.parse(_single(fields, 'field', 'Q'))
    dim = _positive(_single(fields, 'dim'), 'dim')
    basis = [parse_matrix(value, domain, dim, 'Line {}: '.format(number))
             for number, key, value in fields if key == 'basis']
    if not basis:
        raise ParseError('An algebra file needs at least one basis= line')
    return basis


def file_kind(source):
    return _single(_parse_fields(_read_text(source)), 'kind')


def format_representation(rep):
    lines = ['kind=matrix', 'field={}'.format(rep.domain), 'dim={}'.format(rep.dim)]
    lines += ['gen={}'.format(g.format()) for g in rep.generators]
    return '\n'.join(lines) + '\n'


def format_algebra(basis):
    domain = basis[0].domain if basis else RATIONALS
    lines = ['kind=algebra', 'field={}'.format(domain), 'dim={}'.format(basis[0].rows if basis else 1)]
    lines += ['basis={}'.format(b.format()) for b in basis]
    return '\n'.join(lines) + '\n'


def write_representation(rep, path):
    with open(path, 'w', encoding='utf-8', newline='\n') as fout:
        fout.write(format_representation(rep))
