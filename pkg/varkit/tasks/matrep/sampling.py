# -*- coding: utf-8 -*-
# file: sampling.py
# time: 2026/10/17

import logging

from varkit.tasks.exact.matrix import DenseMatrix
from varkit.tasks.exact.scalars import RATIONALS

logger = logging.getLogger(__name__)


def _random_scalar(rng, domain, nonzero=False):
    if domain.kind == 'F':
        low = 1 if nonzero else 0
        return rng.randint(low, domain.p - 1)
    value = rng.randint(-3, 3)
    while nonzero and value == 0:
        value = rng.randint(-3, 3)
    return value


def random_scalar_plus_nilpotent(rng, n, domain=RATIONALS):
    """Random a I + strictly upper triangular matrix with a != 0."""
    alpha = _random_scalar(rng, domain, nonzero=True)
    entries = [[domain.zero] * n for _ in range(n)]
    for i in range(n):
        entries[i][i] = alpha
        for j in range(i + 1, n):
            entries[i][j] = _random_scalar(rng, domain)
    return DenseMatrix(domain, entries)


def word_image(w, images):
    """Matrix image of a free-group word with x_i -> images[i]."""
    some = next(iter(images.values()))
    result = DenseMatrix.identity(some.domain, some.rows)
    for gen, exp in w.syllables:
        result = result @ images[gen].power(exp)
    return result


def sample_nonidentity_image(w, n, letters, domain, rng, attempts=100):
    """
    Map x1..x_letters to random elements of {a I + strictly upper} in T_n(K) and report whether
    some sampled image of w is not the identity. True is a proof that w lies outside the kernel of
    that family; False is sampling evidence only.
    """
    if n < 1 or letters < 1 or attempts < 1:
        raise ValueError('n, letters and attempts must be positive')
    if w.generators() and w.generators()[-1] > letters:
        raise ValueError('Word {} uses more than {} letters'.format(w, letters))
    identity = DenseMatrix.identity(domain, n)
    for attempt in range(attempts):
        images = {i: random_scalar_plus_nilpotent(rng, n, domain) for i in range(1, letters + 1)}
        if word_image(w, images) != identity:
            logger.info('nonidentity image of %s found after %d samples', w, attempt + 1)
            return True
    return False
