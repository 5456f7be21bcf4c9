"""Exact combinatorics of symplectic characters and crystals.

The package computes, in exact integer arithmetic, both sides of a family
of duality identities: character products of exterior powers against
Kostant-type weight multiplicities, Kashiwara-Nakashima crystals against
King tableaux, contraction and jeu de taquin against their star-dual
operators, and branching coefficients of block-diagonal subalgebras.  The
verify module sweeps each identity cell by cell; the cli module exposes
everything as subcommands.
"""

from .errors import (HowekitError, LimitExceeded, MalformedTableau,
                     NotACharacter)
from .partitions import (MultiPartition, Partition, conjugate,
                         enumerate_rectangle, hat, hat_multi, mu_of_n)
from .weyl import WeylElement, enumerate_weyl, positive_roots, rho
from .partfn import (DiagramSpec, branching_coefficient, kostant_partition,
                     restricted_partition, twisted_partition_C,
                     weight_multiplicity)
from .laurent import LaurentPolynomial
from .characters import (CharacterDecomposition, char_product, decompose,
                         elem_sym, jt_determinant, schur_folded, straighten,
                         weyl_character)
from .crystals import (CrystalGraph, TensorElement, crystal_e, crystal_f,
                       enumerate_B, generate_crystal_graph,
                       highest_weight_seed, highest_weight_vertices,
                       is_admissible, is_coadmissible, is_highest_weight,
                       weight_of)
from .duality import (KingElement, KingEntry, enumerate_king_tableaux,
                      is_king_tableau, is_semistandard, king_weight, star,
                      star_inverse, tilde_expand, verify_combinatorial_howe)
from .bicrystal import (D_statistic, bar_complement, charge_king, delta_count,
                        dilate, dilate_fully, from_bar_complement,
                        gamma_count, jdt_bar, kappa, king_e, king_f,
                        statistics, to_lowest)
from .verify import (injectivity_scan, multiplicity_branch_route,
                     multiplicity_char_route, verify_bijection,
                     verify_contraction, verify_generalized_duality,
                     verify_howe_duality, verify_jdt, verify_schur_duality)

__version__ = "0.1.0"

__all__ = [
    "HowekitError", "LimitExceeded", "MalformedTableau", "NotACharacter",
    "Partition", "MultiPartition", "conjugate", "hat", "hat_multi",
    "mu_of_n", "enumerate_rectangle",
    "WeylElement", "enumerate_weyl", "positive_roots", "rho",
    "DiagramSpec", "kostant_partition", "twisted_partition_C",
    "restricted_partition", "weight_multiplicity", "branching_coefficient",
    "LaurentPolynomial",
    "CharacterDecomposition", "char_product", "decompose", "elem_sym",
    "jt_determinant", "schur_folded", "straighten", "weyl_character",
    "CrystalGraph", "TensorElement", "crystal_e", "crystal_f",
    "enumerate_B", "generate_crystal_graph", "highest_weight_seed",
    "highest_weight_vertices", "is_admissible", "is_coadmissible",
    "is_highest_weight", "weight_of",
    "KingElement", "KingEntry", "enumerate_king_tableaux", "is_king_tableau",
    "is_semistandard", "king_weight", "star", "star_inverse", "tilde_expand",
    "verify_combinatorial_howe",
    "D_statistic", "bar_complement", "charge_king", "delta_count", "dilate",
    "dilate_fully", "from_bar_complement", "gamma_count", "jdt_bar", "kappa",
    "king_e", "king_f", "statistics", "to_lowest",
    "injectivity_scan", "multiplicity_branch_route",
    "multiplicity_char_route", "verify_bijection", "verify_contraction",
    "verify_generalized_duality", "verify_howe_duality", "verify_jdt",
    "verify_schur_duality",
]
