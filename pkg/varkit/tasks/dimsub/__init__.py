# -*- coding: utf-8 -*-
# file: __init__.py
# time: 2026/10/17

from varkit.tasks.dimsub.group_algebra import FiniteGroupAlgebra, SubgroupSet, augmentation_ideal_power
from varkit.tasks.dimsub.series import (SeriesRow, SeriesComparison, dimension_series, lower_central_series,
                                        compare_series)
from varkit.tasks.dimsub.verbal import VerbalReport, verbal_ideal, dimension_subgroup_sigma, verbal_report
