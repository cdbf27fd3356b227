"""Exact-arithmetic toolkit for the quadratic equation and its number theory.

Subpackages cover quadratic-field arithmetic (:mod:`quadratica.qfield`),
exact solving and classification (:mod:`quadratica.solver`), the unit
quadratics and their Fibonacci/group structure (:mod:`quadratica.fibgroup`),
metallic means (:mod:`quadratica.metallic`), quadratic congruences
(:mod:`quadratica.congruence`), the perfect-number parabola
(:mod:`quadratica.perfect`), Goldbach witnesses (:mod:`quadratica.goldbach`),
repdigit p-numbers (:mod:`quadratica.pnum`), radical geometry
(:mod:`quadratica.geometry`), and the errata ledger
(:mod:`quadratica.errata`).
"""

from .errors import DomainError
from .qfield import BigRational, QuadElem, parse_quad, qf_make
from .solver import Quadratic, RootKind, RootPair, solve, vertex

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "DomainError",
    "QuadElem",
    "Quadratic",
    "RootKind",
    "RootPair",
    "parse_quad",
    "qf_make",
    "solve",
    "vertex",
    "__version__",
]
