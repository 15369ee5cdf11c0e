# -*- coding: utf-8 -*-
# file: __init__.py
# time: 2026/10/17

from varkit.tasks.exact.scalars import Domain, INTEGERS, RATIONALS, prime_field, require_same_domain
from varkit.tasks.exact.matrix import DenseMatrix
from varkit.tasks.exact.echelon import (Subspace, SpanBuilder, span, rref, hnf, row_space, member, nullspace,
                                        left_nullspace_of_rows)
