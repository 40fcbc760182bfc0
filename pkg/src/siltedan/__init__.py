"""Tilted and silted algebras of the linearly oriented quiver of type A_n.

Two geometric models are implemented side by side with algebraic oracles:
triangulations of an (n+3)-gon for support tau-tilting modules, and graded
arc systems on an (n+1)-gon for 2-term silting complexes.
"""
from .quiver import (Arrow, BoundQuiverAlgebra, Quiver, canonical_form, connected_components,
                     global_dimension, is_connected, is_gentle, linear_quiver)
from .modules import (IntervalModule, STTPair, endomorphism_algebra, enumerate_stt, hom_dim,
                      is_tau_rigid, is_tau_tilting, tau)
from .surface import (MarkedDisk, Triangulation, classify_triangulation, curve_to_module,
                      enumerate_triangulations, induced_algebra, module_of_triangulation, tiles)
from .derived import (GradedArc, GradedArcSystem, endpoint_index, enumerate_2term_silting, h0,
                      induced_graded_algebra, x_of)
from .complexes import (TwoTermComplex, air_complex, endomorphism_algebra_of_complex,
                        hom_dim_complexes, is_silting, is_tilting_complex)
from .classify import CountReport, catalan, count_table, full_verify

__version__ = "0.1.0"
