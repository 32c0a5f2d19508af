"""Catalog data, one module per ambient algebra."""

from . import g2, so5, so6, su2, su3

_MODULES = [su2, su3, so5, g2, so6]


def all_groups():
    return [m.GROUP for m in _MODULES]
