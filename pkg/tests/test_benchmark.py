# -*- coding: utf-8 -*-
# file: test_benchmark.py
# time: 2026/10/17

from varkit.research.benchmark.acceptance_benchmark import (run_amitsur_levitzky, run_dimension_series_catalog,
                                                            run_magnus_lower_central,
                                                            run_scalar_plus_nilpotent_witness, run_sigma_consistency,
                                                            run_tideal_product, run_triangular_asymmetry,
                                                            run_unitriangular_nilpotency)


def test_magnus_lower_central():
    findings = run_magnus_lower_central(seed=1)
    assert findings['samples'] == 100
    assert findings['basic_commutators'] == {weight: 2 ** weight for weight in range(2, 6)}
    assert findings['commutator_products_passed'] == {n: 100 for n in range(2, 6)}
    assert findings['abelian_words_rejected'] == 100


def test_amitsur_levitzky():
    findings = run_amitsur_levitzky()
    assert findings['s4_identity_of_M2']
    assert not findings['s2_identity_of_M2']
    assert findings['s4_value_in_M3_nonzero']


def test_unitriangular_nilpotency():
    findings = run_unitriangular_nilpotency()
    assert all(value == (True, False) for value in findings['nilpotency'].values())
    assert findings['oracle_agrees']


def test_scalar_plus_nilpotent_witness():
    for findings in (run_scalar_plus_nilpotent_witness()[n] for n in (2, 3)):
        assert findings == {'same_envelope': True, 'units_never_nilpotent': True, 'ut_nilpotent': True}


def test_triangular_asymmetry():
    findings = run_triangular_asymmetry()
    assert findings['span_I_E12'] == 1
    assert findings['upper_triangular'] == 0


def test_tideal_product():
    assert run_tideal_product()['equal']


def test_dimension_series_catalog():
    findings = run_dimension_series_catalog(n_max=3)
    assert all(value == (True, True) for value in findings['catalog'].values())
    assert findings['C2_D2_over_Q'] == 2
    assert findings['C2_D2_over_Z'] == 1


def test_sigma_consistency():
    findings = run_sigma_consistency()
    assert findings['S3'] == (3, True)
    assert findings['C4'] == (1, True)
    assert all(abelian for _, abelian in (v for k, v in findings.items() if k != 'seconds'))
