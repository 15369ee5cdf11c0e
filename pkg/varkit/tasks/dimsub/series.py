# -*- coding: utf-8 -*-
# file: series.py
# time: 2026/10/17

import logging
from collections import namedtuple

from varkit.tasks.dimsub.group_algebra import SubgroupSet, augmentation_ideal_power

logger = logging.getLogger(__name__)

SeriesRow = namedtuple('SeriesRow', ['n', 'gamma_order', 'dimension_order', 'contained', 'equal'])


class SeriesComparison:
    """Per-index comparison of a lower central series against a dimension series."""

    def __init__(self, rows):
        self.rows = rows

    @property
    def all_contained(self):
        return all(row.contained for row in self.rows)

    @property
    def all_equal(self):
        return all(row.equal for row in self.rows)

    def findings(self):
        return [row for row in self.rows if not row.equal]

    def format(self):
        lines = ['# n\tgamma_n\tD_n\tcontained\tequal']
        for row in self.rows:
            lines.append('{}\t{}\t{}\t{}\t{}'.format(row.n, row.gamma_order, row.dimension_order,
                                                     str(row.contained).lower(), str(row.equal).lower()))
        return lines


def dimension_series(alg, n_max):
    """D_n(K, G) = {g : g - 1 in Delta^n} for n = 1..n_max."""
    if n_max < 1:
        raise ValueError('n_max must be positive, got {}'.format(n_max))
    table = alg.table
    series = []
    for n in range(1, n_max + 1):
        power = augmentation_ideal_power(alg, n)
        members = [g for g in range(table.order) if g == table.identity or alg.contains_group_minus_one(g, power)]
        series.append(SubgroupSet(table, members))
    return series


def lower_central_series(table, n_max):
    """gamma_1 = G, gamma_(k+1) = [gamma_k, G]."""
    if n_max < 1:
        raise ValueError('n_max must be positive, got {}'.format(n_max))
    everything = range(table.order)
    series = [SubgroupSet(table, everything)]
    while len(series) < n_max:
        previous = series[-1]
        commutators = {table.commutator(g, h) for g in previous for h in everything}
        series.append(SubgroupSet(table, table.normal_closure(commutators)))
    return series


def compare_series(ds, gs):
    """
    Containment and equality of gs[i] inside ds[i]. Inequality is a finding, not an error; for
    integral dimension subgroups gamma_n is always contained in D_n.
    """
    if len(ds) != len(gs):
        raise ValueError('Series lengths differ: {} vs {}'.format(len(ds), len(gs)))
    rows = []
    for n, (d, g) in enumerate(zip(ds, gs), start=1):
        contained = g.issubset(d)
        rows.append(SeriesRow(n, g.order, d.order, contained, contained and g.order == d.order))
        if not contained:
            logger.error('gamma_%d (order %d) is not contained in D_%d (order %d)', n, g.order, n, d.order)
        elif g.order != d.order:
            logger.warning('finding: gamma_%d has order %d but D_%d has order %d', n, g.order, n, d.order)
    return SeriesComparison(rows)
