# -*- coding: utf-8 -*-
# file: __init__.py
# time: 2026/10/17

from varkit.tasks.magnus.series import (TruncatedSeries, DimensionDegree, series_multiply, series_add,
                                        series_subtract, series_one, series_inverse, cutoff_cap, magnus_embed,
                                        dimension_degree, in_free_dimension_subgroup, format_series)
