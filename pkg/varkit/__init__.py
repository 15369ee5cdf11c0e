# -*- coding: utf-8 -*-
# file: __init__.py
# time: 2026/10/17

__version__ = '0.1.0'
__name__ = 'varkit'

from varkit.config.caps_config import caps_config_handler

from varkit.catalog_utils import GroupCatalog, detect_group_file, load_group

from varkit.utils.exceptions import (VarkitError, ParseError, DomainMismatchError, UnsupportedDomainError,
                                     DimensionMismatchError, ResourceCapError)
from varkit.utils.varkit_utils import init_config, find_target_file
