# -*- coding: utf-8 -*-
# file: functional.py
# time: 2026/10/17

"""Report-producing entry points shared by the command line and the benchmark runners."""

from varkit.catalog_utils import catalog_entries, load_group
from varkit.tasks.dimsub import (FiniteGroupAlgebra, compare_series, dimension_series, lower_central_series,
                                 verbal_report)
from varkit.tasks.exact.scalars import RATIONALS, Domain
from varkit.tasks.freegrp.words import format_word, parse_word
from varkit.tasks.grpalg.group_algebra import parse_element
from varkit.tasks.magnus.series import dimension_degree, format_series, in_free_dimension_subgroup, magnus_embed
from varkit.tasks.matrep import (enveloping_algebra, file_kind, find_action_witness, find_polynomial_witness,
                                 format_representation, format_witness, group_closure, read_algebra,
                                 read_representation, triangular_product)
from varkit.tasks.ncpoly import (multilinear_identities, multilinearize, parse_polynomial, standard_polynomial)
from varkit.utils.exceptions import ParseError
from varkit.utils.varkit_utils import resolve_config


def _flag(value):
    return 'true' if value else 'false'


def magnus_report(word_text, letters, cutoff, test_n=None, config=None):
    config = resolve_config(config)
    w = parse_word(word_text)
    lines = ['# magnus\tword={}\tletters={}\tcutoff={}'.format(format_word(w), letters, cutoff)]
    if test_n is None:
        lines.append('# monomial\tcoefficient')
        lines += format_series(magnus_embed(w, letters, cutoff, config=config))
        return lines
    lines.append('in_D_n\t{}'.format(_flag(in_free_dimension_subgroup(w, test_n, letters, config))))
    lines.append('dimension_degree\t{}'.format(dimension_degree(w, letters, cutoff, config)))
    return lines


def dimsub_report(group, coeff, n_max, gamma=False, config=None):
    config = resolve_config(config)
    domain = Domain.parse(coeff)
    _, table = load_group(group, config)
    alg = FiniteGroupAlgebra(table, domain, config)
    ds = dimension_series(alg, n_max)
    lines = ['# dimsub\tgroup={}\tcoeff={}\torder={}'.format(table.name, domain, table.order)]
    if not gamma:
        lines.append('# n\tD_n')
        lines += ['{}\t{}'.format(n, d.order) for n, d in enumerate(ds, start=1)]
        return lines
    comparison = compare_series(ds, lower_central_series(table, n_max))
    return lines + comparison.format()


def identities_report(source, degree, from_rep=False, config=None):
    """Canonical basis of the degree-n multilinear identities of an algebra file or a representation's envelope."""
    config = resolve_config(config)
    if from_rep or file_kind(source) in ('matrix', 'perm'):
        basis = enveloping_algebra(read_representation(source), config)
    else:
        basis = read_algebra(source)
    space = multilinear_identities(basis, degree, config)
    lines = ['# identities\tdegree={}\talgebra_dimension={}\tdimension={}'.format(degree, len(basis),
                                                                               space.dimension)]
    s_n = standard_polynomial(degree, space.domain)
    lines.append('# standard_polynomial_{}\t{}'.format(degree, _flag(space.contains(s_n))))
    lines += [str(f) for f in space.polynomials()]
    return lines


def trprod_report(left, right, hom='full'):
    if hom != 'full':
        raise ParseError('Only the full Hom corner is available from the command line, got {!r}'.format(hom))
    return format_representation(triangular_product(read_representation(left), read_representation(right)))


def parse_identity(text, domain):
    """`action:<group algebra element>` or `poly:<polynomial>`."""
    kind, _, body = text.partition(':')
    kind = kind.strip()
    if kind == 'action':
        return kind, parse_element(body, domain)
    if kind == 'poly':
        return kind, parse_polynomial(body, domain)
    raise ParseError('Identity must start with action: or poly:, got {!r}'.format(text))


def check_report(rep_source, identity_text, config=None):
    """(holds, lines) for an action or polynomial identity of the representation's finite group."""
    config = resolve_config(config)
    rep = read_representation(rep_source)
    kind, identity = parse_identity(identity_text, rep.domain)
    table = group_closure(rep, config)
    if kind == 'action':
        witness = find_action_witness(rep, identity, table, config)
    else:
        witness = find_polynomial_witness(rep, identity, table, config)
    lines = ['# check\t{}\tgroup_order={}'.format(identity_text.strip(), table.order), _flag(witness is None)]
    if witness is not None:
        lines += ['# witness'] + format_witness(witness, table, rep.domain)
    return witness is None, lines


def verbal_lines(group, coeff, identity_texts, config=None):
    config = resolve_config(config)
    domain = Domain.parse(coeff)
    _, table = load_group(group, config)
    gens = []
    for text in identity_texts:
        f = parse_polynomial(text, domain if domain.is_field else RATIONALS)
        gens += multilinearize(f) if f.domain.characteristic == 0 else [f]
    report = verbal_report(FiniteGroupAlgebra(table, domain, config), gens)
    return ['# verbal\tgroup={}\tcoeff={}'.format(table.name, domain),
            '# ideal_dimension\tgroup_order\tD_sigma_order\tstamp',
            '{}\t{}\t{}\t{}'.format(report.ideal_dimension, report.group_order, report.sigma_order,
                                    'lower bound' if report.lower_bound else 'exact')]


def catalog_lines(config=None):
    return ['# name\torder'] + ['{}\t{}'.format(name, order) for name, order in catalog_entries(config)]
