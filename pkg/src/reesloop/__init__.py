"""Loop problems of finite semigroups and Rees matrix constructions."""

from .semigroup import (
    FiniteSemigroup,
    GeneratorMap,
    ReesStructure,
    SandwichMatrix,
    ZERO,
    adjoin_identity,
    adjoin_zero,
    brandt_b2,
    cyclic_group,
    enumerate_semigroups,
    full_generator_map,
    generator_map,
    green_classes,
    group_of_units,
    idempotents,
    is_completely_zero_simple,
    is_ideal,
    is_pseudo_right_unitary,
    is_right_unitary,
    is_weakly_pru,
    left_zero,
    lift_to_monoid,
    make_semigroup,
    maximal_subgroup,
    null_semigroup,
    rees_matrix,
    rees_quotient,
    sandwich,
    subsemigroup,
    trivial_semigroup,
)
from .language import (
    Dfa,
    HatAlphabet,
    Nfa,
    PlainAlphabet,
    concat,
    determinize,
    enumerate_words,
    equivalent,
    factor_closure,
    intersect,
    involution_image,
    left_quotient,
    member,
    minimal_dfa,
    minimize,
    plus,
    prefix_closure,
    right_quotient,
    shortest_separator,
    star,
    suffix_closure,
    union,
)
from .loops import (
    CayleyGraph,
    LoopAutomaton,
    cayley_graph,
    loop_automaton,
    loop_problem,
    monoid_loop_automaton,
    non_returning_language,
    path_language,
    zigzag_factor,
    zigzag_witness,
)
from .transduce import (
    Transducer,
    accepts_pair,
    apply,
    build_rees_transducer,
    choose_words,
    normalize,
)
from .theorems import (
    ReesDecomposition,
    VerificationReport,
    find_admissible_column,
    rees_decompose,
    verify_adjoin_zero,
    verify_czeros,
    verify_rees_quotient,
    verify_semitorees,
    verify_semitoreeszero,
    verify_subsemigroup_intersection,
    verify_unit_sandwich,
)

__version__ = "0.1.0"
