import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import permspec as ps
from permspec.errors import DecompositionError, InvalidInputError, InvalidPermutationError
from permspec.perms import (
    is_minus_decomposable,
    is_plus_decomposable,
    normalized_blocks,
    pattern_at,
)
from props import (
    check_closure_downward_closed,
    check_decomposition_roundtrip,
    check_decomposition_uniqueness,
    check_interval_soundness,
    check_pattern_order_antisymmetry,
)

P = ps.perm


@st.composite
def perms(draw, max_n=7, min_n=1):
    n = draw(st.integers(min_n, max_n))
    return ps.Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


def test_normalize_fixture():
    assert ps.normalize((3, 6, 4, 2)) == P("2431")


def test_normalize_identity_and_empty():
    assert ps.normalize(range(10, 16)) == P("1 2 3 4 5 6")
    assert ps.normalize(()) == ps.EMPTY


def test_normalize_rejects_duplicates():
    with pytest.raises(InvalidPermutationError):
        ps.normalize((1, 3, 3))


def test_permutation_validation():
    with pytest.raises(InvalidPermutationError):
        ps.Permutation((1, 3))


@given(perms())
def test_normalize_fixes_permutations(p):
    assert ps.normalize(p.values) == p


def test_occurrences_fixture():
    occ = ps.occurrences(P("316452"), P("2431"))
    assert occ == {(1, 3, 4, 6), (1, 3, 5, 6)}
    assert ps.occurrences(P("316452"), P("2413")) == set()


@given(perms())
def test_occurrences_reflexive(p):
    assert ps.occurrences(p, p) == {tuple(range(1, len(p) + 1))}


@given(perms(max_n=6), perms(max_n=4))
@settings(max_examples=150)
def test_occurrence_witnesses_are_patterns(host, patt):
    for occ in ps.occurrences(host, patt):
        assert ps.normalize([host.values[i - 1] for i in occ]) == patt


def test_intervals_from_fixtures():
    p = P("546312")
    assert ps.intervals_from(p, 1) == {(1, 1), (1, 2), (1, 3), (1, 4), (1, 6)}
    assert ps.intervals_from(p, 2) == {(2, 2)}
    with pytest.raises(InvalidInputError):
        ps.intervals_from(p, 7)


@given(perms(), st.data())
def test_singleton_always_interval(p, data):
    i = data.draw(st.integers(1, len(p)))
    assert (i, i) in ps.intervals_from(p, i)


def test_is_simple():
    assert ps.is_simple(P("3142"))
    assert ps.is_simple(P("31524"))
    assert not ps.is_simple(P("132"))
    assert not ps.is_simple(P("1"))
    assert not ps.is_simple(P("12"))
    assert not ps.is_simple(P("21"))
    assert not ps.is_simple(P("2143"))


def test_no_size_three_simple():
    assert not any(ps.is_simple(ps.Permutation(p)) for p in itertools.permutations((1, 2, 3)))


def test_substitute_fixtures():
    assert ps.substitute(P("132"), [P("21"), P("132"), P("1")]) == P("214653")
    big = ps.substitute(
        P("2413"), [P("476519328"), P("1"), P("12"), P("35241")]
    )
    assert big == ps.perm("6 9 8 7 3 11 5 4 10 17 1 2 14 16 13 15 12")


@given(perms())
def test_substitute_identity_inflation(p):
    assert ps.substitute(p, [ps.ONE] * len(p)) == p


def test_substitute_errors():
    with pytest.raises(InvalidInputError):
        ps.substitute(P("12"), [P("1")])
    with pytest.raises(InvalidInputError):
        ps.substitute(P("12"), [P("1"), ps.EMPTY])


def test_generalized_substitute_fixtures():
    assert ps.generalized_substitute(P("132"), [P("21"), ps.EMPTY, P("1")]) == P("213")
    assert ps.generalized_substitute(
        P("3142"), [P("21"), ps.EMPTY, P("1"), P("312")]
    ) == P("546312")
    assert ps.generalized_substitute(P("2413"), [ps.EMPTY, P("321"), ps.EMPTY, ps.EMPTY]) == P("321")


def test_decompose_fixtures():
    assert ps.decompose(P("546312")) == (ps.MINUS, (P("213"), P("312")))
    assert ps.decompose(P("12")) == (ps.PLUS, (P("1"), P("1")))
    big = ps.perm("6 9 8 7 3 11 5 4 10 17 1 2 14 16 13 15 12")
    root, children = ps.decompose(big)
    assert root == P("2413")
    assert children == (P("476519328"), P("1"), P("12"), P("35241"))


def test_decompose_rejects_small():
    with pytest.raises(DecompositionError):
        ps.decompose(P("1"))
    with pytest.raises(DecompositionError):
        ps.decompose(ps.EMPTY)


def test_decomposition_tree_fixtures():
    assert ps.decomposition_tree(P("1")) == ps.Leaf()
    t = ps.decomposition_tree(P("214653"))
    assert isinstance(t, ps.Plus)
    assert t.left.to_permutation() == P("21")
    assert t.right.to_permutation() == P("2431")
    big = ps.perm("6 9 8 7 3 11 5 4 10 17 1 2 14 16 13 15 12")
    tree = ps.decomposition_tree(big)
    assert isinstance(tree, ps.Prime) and tree.simple == P("2413")
    assert tree.to_permutation() == big
    with pytest.raises(DecompositionError):
        ps.decomposition_tree(ps.EMPTY)


@given(perms(min_n=2, max_n=7))
@settings(max_examples=200)
def test_tree_roundtrip(p):
    assert ps.decomposition_tree(p).to_permutation() == p


def test_in_closure():
    assert not ps.in_closure(P("3142"), [])
    assert ps.in_closure(P("3142"), [P("3142")])
    assert ps.in_closure(P("214653"), [])
    with pytest.raises(InvalidInputError):
        ps.in_closure(P("12"), [P("123")])


def test_indecomposability_predicates():
    assert is_plus_decomposable(P("12"))
    assert not is_plus_decomposable(P("21"))
    assert is_minus_decomposable(P("21"))
    assert not is_minus_decomposable(P("1"))


def test_normalized_blocks():
    assert normalized_blocks(P("1243")) == {P("1"), P("12"), P("21"), P("132"), P("1243")}
    assert normalized_blocks(P("2341")) == {P("1"), P("12"), P("123"), P("2341")}


def test_pattern_at():
    assert pattern_at(P("546312"), (1, 3)) == P("213")
    assert pattern_at(P("546312"), (4, 6)) == P("312")


def test_antisymmetry_small():
    check_pattern_order_antisymmetry(nmax=5)


def test_roundtrip_small():
    check_decomposition_roundtrip(nmax=6)


def test_uniqueness_small():
    check_decomposition_uniqueness(nmax=6)


def test_interval_soundness_small():
    check_interval_soundness(nmax=6)


def test_closure_downward_closed_small():
    check_closure_downward_closed(nmax=6)
