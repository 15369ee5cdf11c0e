# -*- coding: utf-8 -*-
# file: fox.py
# time: 2026/10/17

from varkit.tasks.exact.scalars import INTEGERS
from varkit.tasks.freegrp.words import Word
from varkit.tasks.grpalg.group_algebra import GroupAlgebraElement


def fox_derivative(w, i):
    """
    Left Fox derivative d w / d x_i over Z:
    d x_j/d x_i = delta_ij, d(uv)/d x_i = du/d x_i + u dv/d x_i, d(x_i^-1)/d x_i = -x_i^-1.
    """
    terms = {}
    prefix = Word()
    generator_inverse = Word.generator(i, -1)
    for letter in w.letters():
        if letter == i:
            terms[prefix] = terms.get(prefix, 0) + 1
        elif letter == -i:
            word = prefix * generator_inverse
            terms[word] = terms.get(word, 0) - 1
        prefix = prefix * Word.from_letters((letter,))
    return GroupAlgebraElement(INTEGERS, terms)


def fox_expansion(w):
    """sum_i (d w/d x_i)(x_i - 1); equals w - 1 for every word w."""
    result = GroupAlgebraElement.zero(INTEGERS)
    for i in w.generators():
        result = result + fox_derivative(w, i) * GroupAlgebraElement.generator_minus_one(i, INTEGERS)
    return result
