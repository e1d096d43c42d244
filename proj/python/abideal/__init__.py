"""Exact enumeration of Abelian ideals of Borel subalgebras.

The heavy lifting lives in the compiled extension: root systems built from
Cartan matrices in exact arithmetic, the minuscule-element bijection, the
long-ideal classifications, and the little-adjoint duality checks.
"""

from ._core import (
    RootSystem,
    duality_report,
    gl_count,
    gl_formula,
    gl_verify,
    ideals,
    long_ideals,
    verify,
    __version__,
)

__all__ = [
    "RootSystem",
    "duality_report",
    "gl_count",
    "gl_formula",
    "gl_verify",
    "ideals",
    "long_ideals",
    "verify",
    "__version__",
]
