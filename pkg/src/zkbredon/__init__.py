"""Exact rational invariants of real moment-angle complexes with permutation symmetry."""

from .action import aut_group, fixed_point_shape, strong_quotient, validate_action
from .bredon import (bredon_cochain, bredon_cohomology, equivariant_cells, ext_table,
                     orbit_sum_oracle, ucss_consistency)
from .coeffsys import (CoefficientSystem, SystemMorphism, constant_system, free_point_system,
                       hom_space, homology_system)
from .doman import injective_envelope, injective_resolution, realize_injective, socle_parts
from .groups import Perm, PermGroup, dihedral, dihedral_square, parse_group, symmetric
from .orbitcat import OrbitCategory, build_orbit_category
from .qlinalg import MatrixQ
from .simplicial import SimplicialComplex, boundary, ngon, parse_complex, simplex
from .zcomplex import betti_numbers, fixed_subcomplex, homology, triangulate

__version__ = "0.1.0"

__all__ = [
    "CoefficientSystem",
    "MatrixQ",
    "OrbitCategory",
    "Perm",
    "PermGroup",
    "SimplicialComplex",
    "SystemMorphism",
    "aut_group",
    "betti_numbers",
    "boundary",
    "bredon_cochain",
    "bredon_cohomology",
    "build_orbit_category",
    "constant_system",
    "dihedral",
    "dihedral_square",
    "equivariant_cells",
    "ext_table",
    "fixed_point_shape",
    "fixed_subcomplex",
    "free_point_system",
    "hom_space",
    "homology",
    "homology_system",
    "injective_envelope",
    "injective_resolution",
    "ngon",
    "orbit_sum_oracle",
    "parse_complex",
    "parse_group",
    "realize_injective",
    "simplex",
    "socle_parts",
    "strong_quotient",
    "symmetric",
    "triangulate",
    "ucss_consistency",
    "validate_action",
]
