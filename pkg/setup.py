# -*- coding: utf-8 -*-
# file: setup.py
# time: 2026/10/17

from setuptools import setup, find_packages
from varkit import __name__, __version__
setup(
    name=__name__,
    version=__version__,
    description='Exact computations with varieties of group representations: identities, '
                'triangular products, T-ideals, Magnus expansions and dimension subgroups',
    python_requires=">=3.8",
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    include_package_data=True,
    package_data={'varkit': ['catalog/*.grp', 'code_structure.md']},
    license='MIT',
    install_requires=['numpy', 'sympy', 'tqdm', 'termcolor'],
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['varkit=varkit.cli:main']},
)
