"""Exact polarity between desirable gambles, credal sets and lexicographic probabilities."""

from .classic_polarity import (
    CredalPolytope,
    generators_to_halfspaces,
    halfspaces_to_generators,
    map_C,
    map_C_inverse,
    polar_of_generators,
    polar_of_halfspaces,
    same_closed_cone,
)
from .conditioning import (
    EventSubset,
    condition_cone,
    condition_credal,
    condition_orthogonal,
    condition_pmf,
    condition_stochastic,
    proper_events,
    rule_R,
)
from .cones import (
    CoherenceCertificate,
    GeneratorCone,
    HalfspaceCone,
    is_coherent_almost,
    is_coherent_desirable,
    member_posi,
    natural_extension,
    posi_weights,
)
from .exact import DimensionError, Gamble, LexOrder, PreconditionError, RMatrix, lex_sign, to_rational, vec_lex_cmp
from .lex_polarity import (
    LCredalWitness,
    SemispaceFamily,
    blacklozenge_member,
    is_coherent_semispaces,
    lozenge_member,
    lposi_member,
    map_G_inverse_member,
    map_G_member,
    maximal_desirable_member,
    semispace_dichotomy,
    semispace_equal,
)
from .matrix_procedures import (
    LPDecomposition,
    equiv_class_test,
    gs_canonical,
    lp_decompose,
    orthogonal_from_stochastic,
    stochastic_from_orthogonal,
)
from .separation import SeparationWitness, separate_almost, separate_lex
