# -*- coding: utf-8 -*-
# file: __init__.py
# time: 2026/10/17

from varkit.tasks.ncpoly.polynomial import (NCPolynomial, standard_polynomial, permutation_sign, evaluate,
                                            multilinearize, parse_polynomial, format_polynomial)
from varkit.tasks.ncpoly.multilinear import (MultilinearSpace, multilinear_monomials, to_vector, from_vector,
                                             restrict_basis, multilinear_identities, t_consequences,
                                             tideal_product_component, multilinear_space_of)
