"""Exact Jordan superalgebras, structure algebras and TKK constructions."""

from ._jtkk import (
    Algebra,
    AlgebraError,
    CatalogError,
    ParseError,
    Tkk,
    algebra,
    dims_report,
    export_text,
    fingerprint,
    jordan_names,
    lie_names,
    out_dims,
    shipped_jordan,
    shipped_lie,
    structure_dims,
    tkk,
    unit,
    verify,
)

__all__ = [
    "Algebra",
    "AlgebraError",
    "CatalogError",
    "ParseError",
    "Tkk",
    "algebra",
    "dims_report",
    "export_text",
    "fingerprint",
    "jordan_names",
    "lie_names",
    "out_dims",
    "shipped_jordan",
    "shipped_lie",
    "structure_dims",
    "tkk",
    "unit",
    "verify",
]
