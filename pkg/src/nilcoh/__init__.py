"""Exact integer cohomology of free nilpotent groups.

Truncated Magnus expansions, standard (Lyndon) sequence combinatorics,
Massey-product 2- and 3-cocycles with verification sweeps, central
extension evaluation and pairings, Milnor invariants and Johnson
homomorphisms, plus a symbolic invariant-form calculus.
"""

from .words import (
    StandardSequence,
    Word,
    commutator,
    format_index,
    format_word,
    generator,
    is_standard,
    lyndon_bracketing,
    parse_index,
    parse_word,
    standard_commutator,
    standard_factorization,
    standard_sequences,
    witt_number,
)
from .magnus import (
    TruncatedPolynomial,
    UnitriangularMatrix,
    c,
    equal_mod_Fk,
    in_lower_central,
    magnus_expand,
    satisfies_shuffle_relations,
    upsilon,
)
from .cochain import (
    Cochain,
    ExtensionElement,
    coboundary,
    cup,
    defining_system,
    evaluate_word_in_extension,
    extension_identity,
    extension_lift,
    massey2,
    pairing,
    s_map,
    splitting_cochain,
)
from .cocycle3 import (
    Census,
    CentralQuotientGroup,
    b_correction,
    census_basis3,
    corrected_3cocycle,
    gamma3,
    h3_rank,
    phi_cocycle,
    triple_massey,
    triple_massey_obstructions,
)
from .topology import (
    FreeEndomorphism,
    JohnsonValue,
    LongitudeSystem,
    johnson_tau,
    milnor_mu,
    morita_vanishes,
    mu_pairing_crosscheck,
    torelli_depth,
)
from .derham import (
    BetaPolynomial,
    DifferentialForm,
    STRUCTURE_SIGN,
    exterior_d,
    gamma_form,
    massey_2form,
    massey_bridge,
    pullback,
    wedge,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
