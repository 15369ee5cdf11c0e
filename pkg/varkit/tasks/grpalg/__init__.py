# -*- coding: utf-8 -*-
# file: __init__.py
# time: 2026/10/17

from varkit.tasks.grpalg.group_algebra import (GroupAlgebraElement, add, scale, multiply, augmentation,
                                               s_n_identity_element, power_identity_element,
                                               abelian_power_identity_element, product_identity_element,
                                               parse_element, format_element)
from varkit.tasks.grpalg.fox import fox_derivative, fox_expansion
