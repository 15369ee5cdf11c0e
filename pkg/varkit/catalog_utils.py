# -*- coding: utf-8 -*-
# file: catalog_utils.py
# time: 2026/10/17

import os

from varkit.tasks.matrep.closure import group_closure
from varkit.tasks.matrep.rep_file import read_representation
from varkit.utils.exceptions import ParseError
from varkit.utils.varkit_utils import find_target_file

CATALOG_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'catalog')


class GroupCatalog:
    C1 = 'C1'
    C2 = 'C2'
    C4 = 'C4'
    C2xC2 = 'C2xC2'
    S3 = 'S3'
    D4 = 'D4'
    Q8 = 'Q8'
    UT3F2 = 'UT3F2'
    A4 = 'A4'

    # the groups whose dimension series are compared with their lower central series
    Comparison = ('C2', 'C4', 'C2xC2', 'S3', 'D4', 'Q8', 'UT3F2', 'A4')

    @classmethod
    def names(cls):
        return [os.path.splitext(os.path.basename(path))[0] for path in find_target_file(CATALOG_DIR, '.grp',
                                                                                        find_all=True)]


def detect_group_file(group):
    """A shipped catalog name (e.g. `S3`) or a path to a representation file."""
    if hasattr(GroupCatalog, group) and isinstance(getattr(GroupCatalog, group), str):
        return os.path.join(CATALOG_DIR, '{}.grp'.format(getattr(GroupCatalog, group)))
    if os.path.isfile(group):
        return group
    raise ParseError('{} is neither a catalog group ({}) nor a file'.format(group, ', '.join(GroupCatalog.names())))


def load_group(group, config=None):
    """Representation and enumerated table of a catalog name or file."""
    path = detect_group_file(group)
    rep = read_representation(path)
    name = os.path.splitext(os.path.basename(path))[0]
    return rep, group_closure(rep, config, name=name)


def catalog_entries(config=None):
    """(name, order) for every shipped group, ordered by name."""
    return [(name, load_group(name, config)[1].order) for name in GroupCatalog.names()]
