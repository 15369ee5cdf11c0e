# -*- coding: utf-8 -*-
# file: __init__.py
# time: 2026/10/17

from varkit.tasks.freegrp.words import (Word, multiply, inverse, power, commutator, left_normed_commutator,
                                        substitute, random_word, parse_word, format_word)
