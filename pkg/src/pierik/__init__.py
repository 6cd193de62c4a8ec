"""K-theoretic Pieri coefficients for Grassmannians of type A, maximal
orthogonal Grassmannians and Lagrangian Grassmannians."""

from .euler import Coefficient, chi, coeff_direct, corner_sum, h
from .recursion import coeff_recursive, lenart_closed_form, recursive_value
from .ring import (
    KVector,
    coefficient,
    dual_class,
    pieri_multiply,
    pieri_row,
    special_chain,
)
from .shapes import (
    LG,
    OG,
    RectA,
    SkewShape,
    diagram_stats,
    dual_partition,
    make_skew,
    parse_partition,
    parse_space,
)
from .tableaux import KLG, KOG, enumerate_tableaux, signed_count


def pieri_coefficient(lam, p, nu, space, engine="recursive") -> Coefficient:
    """c^nu_{lam,p} wrapped with its inputs and the engine used."""
    return Coefficient(coefficient(lam, p, nu, space, engine), space, tuple(lam), p, tuple(nu), engine)


__all__ = [
    "Coefficient", "KLG", "KOG", "KVector", "LG", "OG", "RectA", "SkewShape",
    "chi", "coeff_direct", "coeff_recursive", "coefficient", "corner_sum",
    "diagram_stats", "dual_class", "dual_partition", "enumerate_tableaux", "h",
    "lenart_closed_form", "make_skew", "parse_partition", "parse_space",
    "pieri_coefficient", "pieri_multiply", "pieri_row", "recursive_value",
    "signed_count", "special_chain",
]
