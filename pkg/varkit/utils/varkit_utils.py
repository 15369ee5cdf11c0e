# -*- coding: utf-8 -*-
# file: varkit_utils.py
# time: 2026/10/17

import os
from argparse import Namespace

from tqdm import tqdm

from varkit.config.caps_config import caps_config_handler
from varkit.utils.exceptions import ResourceCapError


def init_config(config_dict=None, base_config_dict=None):
    if base_config_dict is None:
        base_config_dict = caps_config_handler.get_caps_param_dict_from_env()
    if config_dict:
        # reload caps from the parameter dict
        for key in config_dict:
            base_config_dict[key] = config_dict[key]

    assert base_config_dict['max_ambient_dimension'] >= 1
    assert base_config_dict['max_group_order'] >= 1
    assert 1 <= base_config_dict['max_degree'] <= 10
    assert base_config_dict['max_assignments'] >= 1
    assert all(k >= 1 and d >= 1 for k, d in base_config_dict['magnus_cutoff_caps'].items())
    assert base_config_dict['max_series_terms'] >= 2
    assert base_config_dict['log_level'] in {'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'}

    return Namespace(**base_config_dict)


def resolve_config(config=None):
    if config is None:
        return init_config()
    if isinstance(config, dict):
        return init_config(config)
    return config


def override_downward(config, **flags):
    """Lower the caps of `config` to the given flag values; larger values are ignored."""
    for key, value in flags.items():
        if value is None:
            continue
        if value < 1:
            raise ValueError('{} must be positive, got {}'.format(key, value))
        setattr(config, key, min(getattr(config, key), value))
    return config


def check_cap(what, value, cap):
    if value > cap:
        raise ResourceCapError(what, value, cap)


def progress(iterable, config, desc=None, total=None):
    return tqdm(iterable, desc=desc, total=total, disable=not config.show_progress, leave=False)


def find_target_file(dir_path, file_type, exclude_key='', find_all=False):
    '''
    'file_type': find a set of files whose name contain the 'file_type',
    'exclude_key': file name contains 'exclude_key' will be ignored
    'find_all' return a result list if True else the first target file
    '''
    if not dir_path:
        return [] if find_all else ''
    if os.path.isfile(dir_path):
        name = os.path.basename(dir_path).lower()
        if file_type.lower() in name and not (exclude_key and exclude_key in name):
            return [dir_path] if find_all else dir_path
        return [] if find_all else ''
    if os.path.isdir(dir_path):
        found = []
        for file in sorted(os.listdir(dir_path)):
            found += find_target_file(os.path.join(dir_path, file), file_type, exclude_key, find_all=True)
        if find_all:
            return found
        return found[0] if found else ''
    return [] if find_all else ''
