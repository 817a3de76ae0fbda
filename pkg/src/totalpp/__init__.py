"""Exact computations with preprojective and total preprojective algebras of quivers with relations."""
from .exactla import QQ, PrimeField, parse_field
from .quiver import Quiver, build_dynkin, build_q_dn
from .presentation import AlgebraPresentation, PathElement, path_algebra, quotient_algebra, recover_presentation
from .grammar import parse_presentation, render_presentation
from .homological import TauFunctor, dominant_dimension, global_dimension, knit_ar_quiver
from .preprojective import auslander_algebra, build_catalog, morita_reduce, pi_combinatorial, pi_graded, \
    pi_tensor, psi_X
from .total import end_of_pi_tensor_pi, extended_tensor_algebra, total_presentation, verify_iso_via_surjection
from .families import lambda_dn, pi_dn, psi_dn, verify_family_proposition

__all__ = [
    "QQ", "PrimeField", "parse_field", "Quiver", "build_dynkin", "build_q_dn",
    "AlgebraPresentation", "PathElement", "path_algebra", "quotient_algebra",
    "recover_presentation", "parse_presentation", "render_presentation", "TauFunctor",
    "dominant_dimension", "global_dimension", "knit_ar_quiver", "auslander_algebra",
    "build_catalog", "morita_reduce", "pi_combinatorial", "pi_graded", "pi_tensor", "psi_X",
    "end_of_pi_tensor_pi", "extended_tensor_algebra", "total_presentation",
    "verify_iso_via_surjection", "lambda_dn", "pi_dn", "psi_dn", "verify_family_proposition",
]

__version__ = "0.1.0"
