"""Exact Ehrhart polynomials of lattice simplices by the residue theorem."""
from .algebra import Poly, lagrange_interpolate, ramanujan_sum, stirling2
from .counting import (
    BACKEND,
    HPolytopeSpec,
    SimplexSpec,
    count_closed_simplex,
    count_denumerant,
    count_hpolytope,
    count_open_simplex,
)
from .dedekind import dedekind_direct, dedekind_fast, dedekind_root_identity
from .ehrhart import (
    EhrhartPolynomial,
    ResidueBreakdown,
    codim2_closed_form,
    coefficient_via_g,
    ehrhart_closed_residue,
    ehrhart_open_residue,
    hpolytope_count_series,
    lemma4_residue_at_zero,
    pole_orders,
    residue_at_one,
    residues_at_roots,
)
from .errors import BudgetExceeded, IdentityViolation, NonUnitError, PreconditionError, SeriesPrecisionError

__version__ = "0.1.0"
