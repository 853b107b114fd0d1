"""Building equation systems for a class from its basis and simple permutations.

The entry point is ambiguous_system: starting from the closure equations, it
pushes every non-simple forbidden pattern of the basis down into the children
of each inflation term, and keeps adding equations until every restriction on
a right-hand side is defined.  The unions produced here may overlap; the
disambiguator turns them into a specification.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

from .embeddings import Embedding, all_embeddings
from .errors import (
    EquationLimitError,
    InvalidInputError,
    NotAntichainError,
    TrivialClassError,
)
from .perms import (
    MINUS,
    ONE,
    PLUS,
    Permutation,
    contains,
    is_simple,
    normalized_blocks,
    pattern_of,
    sort_key,
)
from .restrictions import (
    Equation,
    Restriction,
    RestrictionTerm,
    intersect_restrictions,
    provably_empty,
    restriction,
    subset_sufficient,
    term_provably_empty,
    term_subset_sufficient,
)

MAX_EQUATIONS_ENV = "PERMSPEC_MAX_EQUATIONS"


@dataclass(frozen=True)
class Basis:
    """A finite antichain of forbidden patterns defining a class."""

    patterns: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if not self.patterns:
            raise TrivialClassError("empty basis: the class of all permutations is unsupported")
        for p in self.patterns:
            if len(p) == 0:
                raise TrivialClassError("basis contains the empty permutation; the class is empty")
            if p == ONE:
                raise TrivialClassError("basis contains 1; the class is empty")
        for p in self.patterns:
            for q in self.patterns:
                if p != q and contains(q, p):
                    raise NotAntichainError(f"{p} is a pattern of {q}")

    @property
    def b_star(self) -> tuple[Permutation, ...]:
        """The non-simple basis elements; only these need propagation."""
        return tuple(p for p in self.patterns if not is_simple(p))


def basis_of(patterns) -> Basis:
    return Basis(tuple(sorted(set(patterns), key=sort_key)))


@dataclass(frozen=True)
class SimpleSet:
    """The simple permutations of the class; the closure's prime node labels.

    The set of a genuine class is closed under taking simple patterns (a
    simple pattern of a member is in the class, hence in the set), so a set
    violating that cannot come from any class and is rejected.
    """

    simples: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        members = set(self.simples)
        for p in self.simples:
            if not is_simple(p):
                raise InvalidInputError(f"{p} is not a simple permutation")
        for p in self.simples:
            for q in _simple_patterns(p):
                if q not in members:
                    raise InvalidInputError(
                        f"{q} is a simple pattern of {p} but is missing from the set; "
                        "no permutation class has these exact simple permutations"
                    )


def _simple_patterns(p: Permutation) -> set[Permutation]:
    out = set()
    for k in range(4, len(p)):
        for positions in itertools.combinations(range(1, len(p) + 1), k):
            q = pattern_of(p, positions)
            if is_simple(q):
                out.add(q)
    return out


def simple_set(simples) -> SimpleSet:
    return SimpleSet(tuple(sorted(set(simples), key=sort_key)))


@dataclass
class EquationSystem:
    """An ordered map from restrictions to their equations.

    The first equation's left-hand side is the class itself.  Complete by
    construction: every restriction used on a right-hand side is a key.
    """

    simples: tuple[Permutation, ...]
    root: Restriction
    equations: dict[Restriction, Equation] = field(default_factory=dict)

    @property
    def all_disjoint(self) -> bool:
        return all(eq.disjoint for eq in self.equations.values())

    def __len__(self) -> int:
        return len(self.equations)

    def __str__(self) -> str:
        return "\n".join(str(eq) for eq in self.equations.values())


def closure_equation(delta: str, simples: SimpleSet) -> Equation:
    """The decomposition-by-root equation for one part of the closure.

    The plain part splits into the atom, a 12-rooted and a 21-rooted term and
    one term per simple permutation; the plus part omits the 12-rooted term
    and the minus part the 21-rooted one.
    """
    unrestricted = restriction("")
    terms = []
    if delta in ("", "-"):
        terms.append(RestrictionTerm(PLUS, (restriction("+"), unrestricted)))
    if delta in ("", "+"):
        terms.append(RestrictionTerm(MINUS, (restriction("-"), unrestricted)))
    for s in simples.simples:
        terms.append(RestrictionTerm(s, (unrestricted,) * len(s)))
    return Equation(restriction(delta), True, tuple(terms), disjoint=True)


def embedding_candidates(g: Permutation, root: Permutation) -> list[tuple[Embedding, tuple[int, ...]]]:
    """Each embedding of g into the root with the child positions that can
    block it: positions whose assigned block has size at least 2.

    A block of size 0 constrains nothing and a block of size 1 cannot be
    avoided by a non-empty child, so neither can defuse its embedding.
    """
    out = []
    for emb in all_embeddings(g, root):
        cands = tuple(
            k
            for k in range(1, len(root) + 1)
            if emb.assignment[k - 1] is not None
            and emb.assignment[k - 1][1] > emb.assignment[k - 1][0]
        )
        out.append((emb, cands))
    return out


def add_constraints(t: RestrictionTerm, g: Permutation) -> tuple[RestrictionTerm, ...]:
    """Rewrite t constrained to avoid g as a union of restriction terms.

    An inflation avoids g exactly when every embedding of g into the root is
    blocked by some child avoiding its assigned block.  Each way of choosing
    one blocking child per embedding contributes a term whose children carry
    the corresponding blocks as new forbidden patterns.  Choices are explored
    incrementally, discarding vectors provably empty or provably included in
    another, which never changes the union.
    """
    if len(g) <= 1:
        raise InvalidInputError("avoided pattern must have size at least 2")
    per_embedding = embedding_candidates(g, t.root)
    if any(not cands for _, cands in per_embedding):
        return ()
    per_embedding.sort(key=lambda ec: (len(ec[1]), ec[0].sort_token()))
    vectors: list[tuple[Restriction, ...]] = [t.children]
    for emb, cands in per_embedding:
        nxt: dict[tuple[Restriction, ...], None] = {}
        for vec in vectors:
            for k in cands:
                child = intersect_restrictions(
                    vec[k - 1], restriction(vec[k - 1].delta, (emb.block(k),))
                )
                nxt.setdefault(vec[: k - 1] + (child,) + vec[k:])
        vectors = _prune_vectors(list(nxt))
    return prune_terms(tuple(RestrictionTerm(t.root, vec) for vec in vectors))


def _prune_vectors(vectors: list[tuple[Restriction, ...]]) -> list[tuple[Restriction, ...]]:
    live = [v for v in vectors if not any(provably_empty(c) for c in v)]
    kept: list[tuple[Restriction, ...]] = []
    for v in live:
        if any(all(subset_sufficient(a, b) for a, b in zip(v, w)) for w in kept):
            continue
        kept = [w for w in kept if not all(subset_sufficient(a, b) for a, b in zip(w, v))]
        kept.append(v)
    return kept


def prune_terms(terms: tuple[RestrictionTerm, ...]) -> tuple[RestrictionTerm, ...]:
    """Drop provably empty terms and terms provably included in another.

    Sound for ambiguous unions: removing a subset of another member never
    changes the union.
    """
    live = [t for t in terms if not term_provably_empty(t)]
    live.sort(key=RestrictionTerm.sort_token)
    kept: list[RestrictionTerm] = []
    for t in live:
        if any(term_subset_sufficient(t, u) for u in kept):
            continue
        kept = [u for u in kept if not term_subset_sufficient(u, t)]
        kept.append(t)
    return tuple(kept)


def fold_avoidance(terms: tuple[RestrictionTerm, ...], g: Permutation) -> tuple[RestrictionTerm, ...]:
    out: list[RestrictionTerm] = []
    for t in terms:
        out.extend(add_constraints(t, g))
    return prune_terms(tuple(out))


def distinct_roots(terms) -> bool:
    """Terms with pairwise distinct roots are disjoint by the uniqueness of
    the decomposition, no matter how they were built."""
    return len({t.root for t in terms}) == len(terms)


def eqn_for_class(delta: str, avoid, simples: SimpleSet) -> Equation:
    """An equation for the closure part restricted by a set of forbidden
    patterns, with every constraint pushed into the children."""
    lhs = restriction(delta, avoid)
    terms = closure_equation(delta, simples).terms
    for g in sorted(lhs.avoid, key=sort_key):
        terms = fold_avoidance(terms, g)
    return Equation(lhs, True, terms, disjoint=distinct_roots(terms))


def equation_cap(basis: Basis, default_from_env: bool = True) -> int:
    """Hard cap on system size: one equation per (delta, avoid, contain)
    triple over the normalized blocks of the propagated basis elements."""
    if default_from_env and MAX_EQUATIONS_ENV in os.environ:
        return int(os.environ[MAX_EQUATIONS_ENV])
    # the block 1 accounts for the three delta choices; an all-simple basis
    # propagates nothing but still needs the three closure equations
    return 3 ** max(1, len(propagated_blocks(basis)))


def ambiguous_system(
    basis: Basis, simples: SimpleSet, max_equations: int | None = None
) -> EquationSystem:
    """The possibly ambiguous equation system describing Av(basis).

    Starts with the equation for the class (the closure restricted by the
    non-simple basis elements) and adds an equation for every restriction
    appearing on a right side only, until the system is complete.
    """
    cap = max_equations if max_equations is not None else equation_cap(basis)
    blocks = propagated_blocks(basis)
    root = restriction("", basis.b_star)
    system = EquationSystem(simples.simples, root)
    queue = [root]
    seen = {root}
    while queue:
        lhs = queue.pop(0)
        eq = eqn_for_class(lhs.delta, lhs.avoid, simples)
        _check_block_invariant(eq, blocks)
        system.equations[lhs] = eq
        if len(system.equations) > cap:
            raise EquationLimitError(
                f"system exceeded {cap} equations; raise {MAX_EQUATIONS_ENV} to override"
            )
        for r in eq.rhs_restrictions():
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return system


def propagated_blocks(basis: Basis) -> set[Permutation]:
    """Normalized blocks of the non-simple basis elements: the universe all
    avoid/contain constraints in any system for this basis live in."""
    blocks: set[Permutation] = set()
    for p in basis.b_star:
        blocks |= normalized_blocks(p)
    return blocks


def _check_block_invariant(eq: Equation, blocks: set[Permutation]) -> None:
    for r in (eq.lhs,) + eq.rhs_restrictions():
        for p in r.avoid + r.contain:
            if p not in blocks:
                raise AssertionError(f"constraint {p} is not a block of any basis element")
