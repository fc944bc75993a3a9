"""Group rings A[G] over finite coefficient rings.

Locality, radicals, socles, annihilators and self-injectivity certificates
for finite groups, Laurent polynomials for the infinite cyclic case, and the
quasi-cyclic p-group construction showing A[Z(p^inf)] is not self-injective.
"""

from .coeffs import CoeffRing, gf, zmod
from .errors import AlgebraError
from .groupring import (
    GroupAlgebra,
    GrElem,
    Ideal,
    Side,
    is_local_ring,
    jacobson_radical,
    omega,
    right_socle,
)
from .structures import FiniteGroup, make_cyclic, make_direct_product, parse_group_spec

__all__ = [
    "AlgebraError",
    "CoeffRing",
    "FiniteGroup",
    "GrElem",
    "GroupAlgebra",
    "Ideal",
    "Side",
    "gf",
    "is_local_ring",
    "jacobson_radical",
    "make_cyclic",
    "make_direct_product",
    "omega",
    "parse_group_spec",
    "right_socle",
    "zmod",
]
__version__ = "0.1.0"
