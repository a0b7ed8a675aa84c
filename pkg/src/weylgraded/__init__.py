"""weylgraded: exact computations in the graded module category of the Weyl algebra.

The package mechanizes the classification of rings graded equivalent to the
first Weyl algebra in its Euler gradation: Picard group normal forms, necklace
canonicalization of conjugacy classes, explicit construction of the canonical
rings S(J, n) with an independent module-theoretic oracle, and the graded
Grothendieck group.
"""
from .zfin import (
    AdmissiblePair,
    FinSet,
    NecklaceClass,
    NotInImageError,
    affine_image,
    boundary,
    inverse_boundary,
    necklace_canonical,
    necklace_count,
    necklace_enumerate,
    shift_delta,
    slice,
    symmetric_difference,
)
from .skew import (
    RationalPoly,
    SkewElement,
    conjugate_by_power,
    skew_multiply,
    weyl_membership,
    x,
    y,
)
from .lattices import (
    DSet,
    GradedLattice,
    SimpleLabel,
    cokernel_support,
    ext_dim_simples,
    hom_generator,
    iota_lattice,
    is_A_module,
    lattice_dset,
    lattice_intersect,
    lattice_scale,
    simple_factor,
    to_dset,
)
from .picard import (
    PicElement,
    act_on_dset,
    act_on_simple,
    compose,
    coverage_witness,
    identity,
    inverse,
    iota,
    is_generative,
    is_numerically_trivial,
    omega,
    power,
    shift,
    sign_rank,
)
from .classify import canonical_admissible, morita_class_count, same_morita_class
from .gwa import (
    GWAPresentation,
    RingPieces,
    graded_piece_closed_form,
    present,
    ring_pieces,
    simplicity_root_test,
    twisted_endo_piece_oracle,
    verify_gwa_embedding,
    verify_ring_closure,
)
from .ktheory import (
    K0Class,
    ProjectiveSum,
    absorb_shift,
    iso_test,
    k0_class,
    normalize_sum,
    stably_free_witness,
    theta_map,
)
from .cli import parse_expression, run_command

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePair",
    "DSet",
    "FinSet",
    "GWAPresentation",
    "GradedLattice",
    "K0Class",
    "NecklaceClass",
    "NotInImageError",
    "PicElement",
    "ProjectiveSum",
    "RationalPoly",
    "RingPieces",
    "SimpleLabel",
    "SkewElement",
    "absorb_shift",
    "act_on_dset",
    "act_on_simple",
    "affine_image",
    "boundary",
    "canonical_admissible",
    "cokernel_support",
    "compose",
    "conjugate_by_power",
    "coverage_witness",
    "ext_dim_simples",
    "graded_piece_closed_form",
    "hom_generator",
    "identity",
    "inverse",
    "inverse_boundary",
    "iota",
    "iota_lattice",
    "is_A_module",
    "is_generative",
    "is_numerically_trivial",
    "iso_test",
    "k0_class",
    "lattice_dset",
    "lattice_intersect",
    "lattice_scale",
    "morita_class_count",
    "necklace_canonical",
    "necklace_count",
    "necklace_enumerate",
    "normalize_sum",
    "omega",
    "parse_expression",
    "power",
    "present",
    "ring_pieces",
    "run_command",
    "same_morita_class",
    "shift",
    "shift_delta",
    "sign_rank",
    "simple_factor",
    "simplicity_root_test",
    "skew_multiply",
    "slice",
    "stably_free_witness",
    "symmetric_difference",
    "theta_map",
    "to_dset",
    "twisted_endo_piece_oracle",
    "verify_gwa_embedding",
    "verify_ring_closure",
    "weyl_membership",
    "x",
    "y",
]
