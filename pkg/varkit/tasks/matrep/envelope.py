# -*- coding: utf-8 -*-
# file: envelope.py
# time: 2026/10/17

import logging

from varkit.tasks.exact.echelon import SpanBuilder
from varkit.tasks.exact.matrix import DenseMatrix

logger = logging.getLogger(__name__)


def _saturate(domain, size, seeds, multipliers, config=None):
    """Span of the seeds closed under right multiplication by `multipliers`."""
    builder = SpanBuilder(domain, size * size, config)
    frontier = [m for m in seeds if builder.add(m.flatten())]
    while frontier:
        grown = []
        for m in frontier:
            for s in multipliers:
                candidate = m @ s
                if builder.add(candidate.flatten()):
                    grown.append(candidate)
        frontier = grown
    return builder.subspace()


def _as_matrices(subspace, domain, size):
    return [DenseMatrix.from_flat(domain, size, size, row) for row in subspace.basis]


def enveloping_algebra(rep, config=None):
    """Canonical basis of the linear span of the group generated by rep, i.e. of all generator words."""
    multipliers = list(rep.generators) + list(rep.inverses)
    subspace = _saturate(rep.domain, rep.dim, [rep.identity()], multipliers, config)
    logger.info('enveloping algebra: dimension %d of %d', subspace.rank, rep.dim * rep.dim)
    return _as_matrices(subspace, rep.domain, rep.dim)


def augmentation_image(rep, config=None):
    """
    Basis of N, the smallest multiplicatively closed span containing g - I and g^-1 - I for the
    generators g: the image of the augmentation ideal of the group algebra.
    """
    identity = rep.identity()
    seeds = [g - identity for g in rep.generators] + [g - identity for g in rep.inverses]
    subspace = _saturate(rep.domain, rep.dim, seeds, seeds, config)
    return _as_matrices(subspace, rep.domain, rep.dim)


def aug_image_nilpotency(rep, n, config=None):
    """
    True when N^n = 0, i.e. (V, G) satisfies x o (y1 - 1)...(yn - 1) = 0 and acts trivially on
    the factors of a series of length n.
    """
    if n < 1:
        raise ValueError('n must be positive, got {}'.format(n))
    domain, size = rep.domain, rep.dim
    base = augmentation_image(rep, config)
    power = base
    for k in range(2, n + 1):
        if not power:
            break
        builder = SpanBuilder(domain, size * size, config)
        for p in power:
            for b in base:
                builder.add((p @ b).flatten())
        next_power = _as_matrices(builder.subspace(), domain, size)
        if len(next_power) == len(power):
            # N^k = N^(k-1) != 0, the chain is stuck
            logger.info('augmentation image stabilises at dimension %d from degree %d', len(power), k - 1)
            return False
        power = next_power
    return not power
