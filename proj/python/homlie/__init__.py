"""Exact workbench for finite-dimensional hom-Lie superalgebras.

Thin wrapper over the C++ extension module. All functions take algebra
files as text (see the README for the format) and return plain dicts.
"""

try:
    from ._homlie import (
        HomlieError,
        analyze,
        bracket,
        check,
        extend_form,
        prolong,
        quotient,
    )
except ImportError:  # in-tree test runs put the extension on sys.path
    from _homlie import (
        HomlieError,
        analyze,
        bracket,
        check,
        extend_form,
        prolong,
        quotient,
    )

__all__ = [
    "HomlieError",
    "analyze",
    "bracket",
    "check",
    "extend_form",
    "prolong",
    "quotient",
]
