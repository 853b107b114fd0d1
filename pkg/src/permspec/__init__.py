"""Combinatorial specifications of permutation classes: construction from a
finite basis and the class's simple permutations, exact counting, and uniform
random sampling, with brute-force oracles for verification."""

from .counting import (
    class_counts,
    coefficients,
    quadratic_residual,
    substitution_closed_spec,
    to_gf_system,
)
from .disambiguate import (
    add_mandatory,
    disambiguate,
    eqn_for_restriction,
    specification,
)
from .embeddings import (
    BlockDecomposition,
    Embedding,
    all_embeddings,
    block_decompositions,
    embeddings_for,
)
from .errors import PermspecError
from .oracle import (
    audit_specification,
    class_members,
    closure_members,
    enumerate_class,
    member_of_restriction,
    simples_in_class,
)
from .perms import (
    EMPTY,
    MINUS,
    ONE,
    PLUS,
    DecompositionTree,
    Leaf,
    Minus,
    Permutation,
    Plus,
    Prime,
    avoids,
    contains,
    decompose,
    decomposition_tree,
    generalized_substitute,
    in_closure,
    intervals_from,
    is_simple,
    normalize,
    occurrences,
    perm,
    substitute,
)
from .restrictions import (
    Equation,
    Restriction,
    RestrictionTerm,
    canonicalize,
    complement_restriction,
    complement_term,
    intersect_restrictions,
    intersect_terms,
    is_empty_sufficient,
    restriction,
    subset_sufficient,
    term,
)
from .sampler import build_tables, derivation_probability, sample, sample_many
from .system import (
    Basis,
    EquationSystem,
    SimpleSet,
    add_constraints,
    ambiguous_system,
    basis_of,
    closure_equation,
    eqn_for_class,
    simple_set,
)

__all__ = [name for name in dir() if not name.startswith("_")]
