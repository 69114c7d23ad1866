"""Type A: eigenvalue configurations, their symmetry groups, and line bundles on X."""
from .configs import (
    AffineMap,
    MobiusMap,
    affine_equivalent,
    affine_witnesses,
    aut_report,
    canonical_point,
    mobius_equivalent,
    mobius_witnesses,
    stab_affine,
    stab_mobius,
)
from .groups import Classification, PermutationGroup, classify, cycles
from .lemma import (
    characterize_search,
    euler_closed_form,
    euler_hessenberg_linebundle,
    weyl_dim_A,
)
from .linalg import pencil_charpoly, pencil_charpoly_raw, symmetrize
from .scalars import INF, fmt, parse_config, parse_scalar

__all__ = [
    "AffineMap",
    "MobiusMap",
    "affine_equivalent",
    "affine_witnesses",
    "aut_report",
    "canonical_point",
    "mobius_equivalent",
    "mobius_witnesses",
    "stab_affine",
    "stab_mobius",
    "Classification",
    "PermutationGroup",
    "classify",
    "cycles",
    "characterize_search",
    "euler_closed_form",
    "euler_hessenberg_linebundle",
    "weyl_dim_A",
    "pencil_charpoly",
    "pencil_charpoly_raw",
    "symmetrize",
    "INF",
    "fmt",
    "parse_config",
    "parse_scalar",
]
