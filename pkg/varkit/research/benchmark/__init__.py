# -*- coding: utf-8 -*-
# file: __init__.py
# time: 2026/10/17

from varkit.research.benchmark.acceptance_benchmark import (run_magnus_lower_central, run_amitsur_levitzky,
                                                            run_unitriangular_nilpotency,
                                                            run_scalar_plus_nilpotent_witness,
                                                            run_triangular_asymmetry, run_tideal_product,
                                                            run_dimension_series_catalog, run_sigma_consistency,
                                                            run_benchmark_for_all)
