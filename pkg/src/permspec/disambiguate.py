"""Mandatory-pattern propagation, disambiguation, and the full specification.

Equations built by the system module may have overlapping terms.  Overlap can
only happen between terms sharing a root, and each such group is rewritten as
the disjoint union, over every non-empty subset of the group, of the
intersection of the chosen terms with the complements of the others.
Complements introduce mandatory patterns, which propagate through inflations
just like forbidden ones, by embeddings.  The specification driver repeats
equation construction and disambiguation until the system is closed.
"""

from __future__ import annotations

import itertools

from .embeddings import all_embeddings
from .errors import EquationLimitError, InvalidInputError
from .perms import Permutation, sort_key
from .restrictions import (
    Equation,
    Restriction,
    RestrictionTerm,
    complement_restriction,
    intersect_restrictions,
    provably_empty,
    restriction,
    root_rank,
    term_provably_empty,
    term_subset_sufficient,
)
from .system import (
    MAX_EQUATIONS_ENV,
    Basis,
    EquationSystem,
    SimpleSet,
    _check_block_invariant,
    closure_equation,
    distinct_roots,
    equation_cap,
    fold_avoidance,
    propagated_blocks,
    prune_terms,
)


def add_mandatory(t: RestrictionTerm, g: Permutation) -> tuple[RestrictionTerm, ...]:
    """Rewrite t constrained to contain g as a union of restriction terms.

    An inflation contains g exactly when some embedding of g into the root is
    realized, so each embedding contributes one term whose children must
    contain their assigned blocks.  Blocks of size 0 or 1 impose nothing.
    """
    if len(g) <= 1:
        raise InvalidInputError("mandatory pattern must have size at least 2")
    out = []
    for emb in all_embeddings(g, t.root):
        children = list(t.children)
        for k in range(1, len(t.root) + 1):
            block = emb.block(k)
            if len(block) >= 2:
                children[k - 1] = intersect_restrictions(
                    children[k - 1], restriction(children[k - 1].delta, (), (block,))
                )
        out.append(RestrictionTerm(t.root, tuple(children)))
    return prune_terms(tuple(out))


def fold_mandatory(terms: tuple[RestrictionTerm, ...], g: Permutation) -> tuple[RestrictionTerm, ...]:
    out: list[RestrictionTerm] = []
    for t in terms:
        out.extend(add_mandatory(t, g))
    return prune_terms(tuple(out))


def eqn_for_restriction(delta: str, avoid, contain, simples: SimpleSet) -> Equation:
    """A (possibly ambiguous) equation for one restriction.

    Three steps: the closure decomposition for delta, then every forbidden
    pattern pushed into the children, then every mandatory one.  The size-1
    atom survives only when nothing is mandatory.
    """
    lhs = restriction(delta, avoid, contain)
    if provably_empty(lhs):
        return Equation(lhs, False, (), disjoint=True)
    terms = closure_equation(delta, simples).terms
    for g in sorted(lhs.avoid, key=sort_key):
        terms = fold_avoidance(terms, g)
    for g in sorted(lhs.contain, key=sort_key):
        terms = fold_mandatory(terms, g)
    return Equation(lhs, not lhs.contain, terms, disjoint=distinct_roots(terms))


def complement_choice_vectors(t: RestrictionTerm):
    """Child vectors whose union is the complement of t among same-root
    inflations: each child keeps its restriction or takes one part of its
    complement, excluding the all-keep vector."""
    options = [(child,) + complement_restriction(child) for child in t.children]
    for picks in itertools.product(*(range(len(o)) for o in options)):
        if any(p != 0 for p in picks):
            yield tuple(options[i][p] for i, p in enumerate(picks))


def disambiguate(eq: Equation) -> Equation:
    """Rewrite the right-hand side as a disjoint union.

    Terms with distinct roots are disjoint already, and so is the atom, so
    only same-root groups of two or more terms are expanded.  Within a group
    t_1..t_k the union is replaced by the disjoint union over non-empty
    subsets X of the intersections of t_i for i in X with complements of the
    others; complements distribute into disjoint unions of terms and all
    intersections are componentwise.  Provably empty parts are dropped, and
    literal duplicates (necessarily empty, since the parts are disjoint)
    are kept once.
    """
    groups: dict[Permutation, list[RestrictionTerm]] = {}
    for t in eq.terms:
        groups.setdefault(t.root, []).append(t)
    out: list[RestrictionTerm] = []
    for root in sorted(groups, key=root_rank):
        group = groups[root]
        if len(group) == 1:
            out.extend(group)
        else:
            out.extend(_disambiguate_group(group))
    return Equation(eq.lhs, eq.has_one, tuple(out), disjoint=True)


def _disambiguate_group(group: list[RestrictionTerm]) -> list[RestrictionTerm]:
    k = len(group)
    out: list[RestrictionTerm] = []
    seen: set[RestrictionTerm] = set()
    for size in range(1, k + 1):
        for chosen in itertools.combinations(range(k), size):
            parts = _slice_terms(group, set(chosen))
            for t in parts:
                if t not in seen:
                    seen.add(t)
                    out.append(t)
    return out


def _slice_terms(group: list[RestrictionTerm], chosen: set[int]) -> list[RestrictionTerm]:
    """Terms of the disjoint slice: members of `chosen` intersected with the
    complements of the rest of the group."""
    base: RestrictionTerm | None = None
    for i in sorted(chosen):
        base = group[i] if base is None else _intersect_same_root(base, group[i])
        if term_provably_empty(base):
            return []
    assert base is not None
    slice_terms = [base]
    for j in range(len(group)):
        if j in chosen:
            continue
        nxt: list[RestrictionTerm] = []
        for s in slice_terms:
            for vec in complement_choice_vectors(group[j]):
                u = RestrictionTerm(
                    s.root,
                    tuple(intersect_restrictions(a, b) for a, b in zip(s.children, vec)),
                )
                if not term_provably_empty(u):
                    nxt.append(u)
        slice_terms = _dedupe(nxt)
        if not slice_terms:
            return []
    return slice_terms


def _intersect_same_root(a: RestrictionTerm, b: RestrictionTerm) -> RestrictionTerm:
    return RestrictionTerm(
        a.root, tuple(intersect_restrictions(x, y) for x, y in zip(a.children, b.children))
    )


def _dedupe(terms: list[RestrictionTerm]) -> list[RestrictionTerm]:
    seen: dict[RestrictionTerm, None] = {}
    for t in terms:
        seen.setdefault(t)
    return list(seen)


def suspect_empty_terms(eq: Equation) -> tuple[RestrictionTerm, ...]:
    """Terms of a disjoint equation provably included in a sibling.

    Inside a disjoint union such a term must denote the empty set; it is
    reported for an external semantic probe rather than silently removed,
    since the inclusion lemma alone does not prove emptiness.
    """
    out = []
    for t in eq.terms:
        if any(u is not t and term_subset_sufficient(t, u) for u in eq.terms):
            out.append(t)
    return tuple(out)


def specification(
    basis: Basis, simples: SimpleSet, max_equations: int | None = None
) -> EquationSystem:
    """A combinatorial specification (disjoint equation system) for Av(basis).

    Same driver as the ambiguous system, with every equation disambiguated as
    it is produced; complements introduce restrictions with mandatory
    patterns, which receive their own equations in turn.
    """
    cap = max_equations if max_equations is not None else equation_cap(basis)
    blocks = propagated_blocks(basis)
    root = restriction("", basis.b_star)
    system = EquationSystem(simples.simples, root)
    queue = [root]
    seen = {root}
    while queue:
        lhs = queue.pop(0)
        eq = disambiguate(eqn_for_restriction(lhs.delta, lhs.avoid, lhs.contain, simples))
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
