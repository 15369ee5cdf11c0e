# -*- coding: utf-8 -*-
# file: caps_config_handler.py
# time: 2026/10/17

import copy
import os

# every key of the base dict, with the meaning of the value
_caps_param_dict_template = {'max_ambient_dimension': 100000,  # longest coordinate vector a Subspace may hold
                             'max_group_order': 20000,  # largest group group_closure will enumerate
                             'max_degree': 6,  # highest degree of a multilinear space P_n
                             'max_assignments': 10 ** 7,  # exhaustive identity checks, |G|^(#variables)
                             'magnus_cutoff_caps': {1: 16, 2: 8, 3: 6},  # letters -> largest cutoff
                             'max_series_terms': 1093,  # monomial budget for letter counts not in the table
                             'show_progress': False,  # tqdm bars on long enumerations
                             'log_level': 'WARNING',
                             'seed': None
                             }

_caps_param_dict_base = {'max_ambient_dimension': 100000,
                         'max_group_order': 20000,
                         'max_degree': 6,
                         'max_assignments': 10 ** 7,
                         'magnus_cutoff_caps': {1: 16, 2: 8, 3: 6},
                         'max_series_terms': 1093,
                         'show_progress': False,
                         'log_level': 'WARNING',
                         'seed': None
                         }

# environment variable -> (config key, parser)
_env_overrides = {'VARKIT_MAX_GROUP': ('max_group_order', int),
                  'VARKIT_MAX_DEGREE': ('max_degree', int),
                  'VARKIT_MAX_ASSIGN': ('max_assignments', int),
                  'VARKIT_MAX_AMBIENT': ('max_ambient_dimension', int),
                  'VARKIT_LOG_LEVEL': ('log_level', str.upper),
                  }


def get_caps_param_dict_template():
    return copy.deepcopy(_caps_param_dict_template)


def get_caps_param_dict_base():
    return copy.deepcopy(_caps_param_dict_base)


def get_caps_param_dict_from_env(environ=None):
    environ = os.environ if environ is None else environ
    param_dict = get_caps_param_dict_base()
    for env_name, (key, parse) in _env_overrides.items():
        raw = environ.get(env_name)
        if raw is None or not raw.strip():
            continue
        try:
            param_dict[key] = parse(raw.strip())
        except ValueError:
            raise ValueError('Invalid value {!r} for {}'.format(raw, env_name))
    return param_dict
