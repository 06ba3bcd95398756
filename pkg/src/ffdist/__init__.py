"""Equilateral and two-distance point sets over finite fields.

Exact-arithmetic toolkit: finite-field and linear algebra primitives,
the modular equilateral construction and its midpoint two-distance set,
strongly-regular verification of the midpoint graph, and an exhaustive
search oracle, all tied together by a certificate file format and CLI.
"""

__version__ = "0.1.0"

from .field import field_make, SquareClass  # noqa: F401
