# -*- coding: utf-8 -*-
# file: exceptions.py
# time: 2026/10/17


class VarkitError(Exception):
    pass


class ParseError(VarkitError, ValueError):
    """Malformed word, element, polynomial, scalar or file text."""


class DomainMismatchError(VarkitError, ValueError):
    """Operands live over different coefficient domains, or the domain is not allowed."""


class UnsupportedDomainError(DomainMismatchError):
    """The operation is refused for this domain (e.g. polarization in characteristic p)."""


class DimensionMismatchError(VarkitError, ValueError):
    pass


class ResourceCapError(VarkitError, RuntimeError):
    """A configured cap (group order, degree, assignments, ambient dimension) was exceeded."""

    def __init__(self, what, value, cap):
        super().__init__('{} = {} exceeds the configured cap {}'.format(what, value, cap))
        self.what = what
        self.value = value
        self.cap = cap
