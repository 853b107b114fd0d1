"""Brute-force ground truth used to verify every other stage on small sizes.

Class and closure members are enumerated incrementally: inserting the new
maximum value into a member of size n-1 in every possible way produces each
size-n permutation exactly once, and both kinds of set are closed under
removing the maximum, so filtering candidates by the defining predicate is
exhaustive.  Everything here trades speed for obviousness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidInputError
from .perms import (
    MINUS,
    PLUS,
    Permutation,
    cached_contains,
    decompose,
    in_closure,
    is_minus_decomposable,
    is_plus_decomposable,
    is_simple,
    sort_key,
)
from .restrictions import Restriction
from .system import EquationSystem


def _avoids_all(p: Permutation, patterns: Sequence[Permutation]) -> bool:
    return not any(
        len(b) <= len(p) and cached_contains(p.values, b.values) for b in patterns
    )


def _grow(members: list[Permutation], size: int) -> Iterable[Permutation]:
    """Candidates of the next size: insert the new maximum everywhere."""
    for p in members:
        for pos in range(size):
            vals = p.values[:pos] + (size,) + p.values[pos:]
            yield Permutation(vals)


def enumerate_class(patterns: Sequence[Permutation], n: int) -> list[Permutation]:
    """All size-n permutations avoiding every basis pattern."""
    return class_members(patterns, n)[n]


def class_members(patterns: Sequence[Permutation], nmax: int) -> dict[int, list[Permutation]]:
    """Members of the class for every size up to nmax."""
    patterns = list(patterns)
    out: dict[int, list[Permutation]] = {0: []}
    level = [Permutation((1,))] if _avoids_all(Permutation((1,)), patterns) else []
    out[1] = level
    for n in range(2, nmax + 1):
        level = [p for p in _grow(level, n) if _avoids_all(p, patterns)]
        out[n] = level
    return out


def simples_in_class(patterns: Sequence[Permutation], maxlen: int) -> set[Permutation]:
    """Simple permutations of the class up to the given size.

    Whether the class has any larger simple permutations is not decided here;
    the caller asserts the bound is big enough (a hit at exactly maxlen is a
    warning sign).
    """
    members = class_members(patterns, maxlen)
    return {p for n in range(4, maxlen + 1) for p in members[n] if is_simple(p)}


def closure_members(simples: Iterable[Permutation], nmax: int) -> dict[int, list[Permutation]]:
    """Members of the substitution closure for every size up to nmax.

    A candidate is a member iff its decomposition root is allowed and all its
    children are members; children are smaller, hence already enumerated.
    """
    allowed = set(simples)
    for s in allowed:
        if not is_simple(s):
            raise InvalidInputError(f"{s} is not simple")
    out: dict[int, list[Permutation]] = {0: [], 1: [Permutation((1,))]}
    known: set[Permutation] = {Permutation((1,))}
    level = out[1]
    for n in range(2, nmax + 1):
        nxt = []
        for p in _grow(level, n):
            root, kids = decompose(p)
            if (root == PLUS or root == MINUS or root in allowed) and all(
                k in known for k in kids
            ):
                nxt.append(p)
        known.update(nxt)
        out[n] = nxt
        level = nxt
    return out


def member_of_restriction(
    sigma: Permutation, r: Restriction, simples: Iterable[Permutation]
) -> bool:
    """Direct evaluation of the restriction's defining conditions."""
    if len(sigma) == 0:
        return False
    if not in_closure(sigma, simples):
        return False
    if r.delta == "+" and is_plus_decomposable(sigma):
        return False
    if r.delta == "-" and is_minus_decomposable(sigma):
        return False
    return all(
        not cached_contains(sigma.values, e.values) for e in r.avoid
    ) and all(cached_contains(sigma.values, a.values) for a in r.contain)


def semantic_empty_probe(
    r: Restriction, simples: Iterable[Permutation], bound: int
) -> bool:
    """True when the restriction has no members up to the bound.

    Not a proof of emptiness, only evidence; never used to rewrite systems.
    """
    closure = closure_members(simples, bound)
    return not any(
        member_of_restriction(p, r, simples) for n in range(1, bound + 1) for p in closure[n]
    )


@dataclass
class AuditReport:
    """Outcome of checking a system's equations against direct enumeration."""

    nmax: int
    equations_checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        head = f"audit to size {self.nmax}: {self.equations_checked} equations, "
        if self.passed:
            return head + "no violations"
        lines = "\n  ".join(self.violations[:20])
        more = "" if len(self.violations) <= 20 else f"\n  ... {len(self.violations) - 20} more"
        return head + f"{len(self.violations)} violations\n  {lines}{more}"


class _Denotations:
    """Size-indexed member sets of restrictions, computed once each."""

    def __init__(self, simples: Sequence[Permutation], nmax: int):
        self.simples = tuple(simples)
        self.closure = closure_members(self.simples, nmax)
        self._cache: dict[tuple[Restriction, int], frozenset[Permutation]] = {}
        self._split_cache: dict[Permutation, tuple[Permutation, tuple[Permutation, ...]]] = {}

    def members(self, r: Restriction, n: int) -> frozenset[Permutation]:
        key = (r, n)
        if key not in self._cache:
            # closure membership holds by construction; only the delta and
            # the pattern constraints need testing here
            out = []
            for p in self.closure[n]:
                if r.delta and n > 1:
                    root, _ = self.split(p)
                    if (r.delta == "+" and root == PLUS) or (
                        r.delta == "-" and root == MINUS
                    ):
                        continue
                if any(cached_contains(p.values, e.values) for e in r.avoid):
                    continue
                if all(cached_contains(p.values, a.values) for a in r.contain):
                    out.append(p)
            self._cache[key] = frozenset(out)
        return self._cache[key]

    def split(self, p: Permutation):
        if p not in self._split_cache:
            self._split_cache[p] = decompose(p)
        return self._split_cache[p]


def audit_specification(
    system: EquationSystem,
    basis_patterns: Sequence[Permutation],
    nmax: int,
) -> AuditReport:
    """Check, for every equation and size up to nmax, that the right-hand
    side parts are pairwise disjoint (for disjoint-flagged equations), that
    their union is exactly the left-hand side, and that the first equation's
    left side is exactly the brute-force class."""
    report = AuditReport(nmax=nmax)
    den = _Denotations(system.simples, nmax)
    truth = class_members(basis_patterns, nmax)
    for lhs, eq in system.equations.items():
        report.equations_checked += 1
        for n in range(1, nmax + 1):
            parts: list[tuple[str, frozenset[Permutation]]] = []
            if eq.has_one and n == 1:
                parts.append(("1", frozenset({Permutation((1,))})))
            for t in eq.terms:
                parts.append((str(t), _term_members(t, n, den)))
            union: set[Permutation] = set()
            total = 0
            for _, ms in parts:
                union |= ms
                total += len(ms)
            if eq.disjoint and total != len(union):
                witness = _overlap_witness(parts)
                report.violations.append(
                    f"size {n}: overlapping terms in [{eq.lhs}]: {witness}"
                )
            expected = den.members(lhs, n)
            if union != expected:
                missing = sorted(expected - union, key=sort_key)[:3]
                extra = sorted(union - expected, key=sort_key)[:3]
                report.violations.append(
                    f"size {n}: rhs of [{eq.lhs}] mismatch; missing {missing}, extra {extra}"
                )
    for n in range(1, nmax + 1):
        got = den.members(system.root, n)
        want = set(truth[n])
        if got != want:
            report.violations.append(
                f"size {n}: class restriction [{system.root}] disagrees with Av(basis)"
            )
    return report


def _term_members(t, n: int, den: _Denotations) -> frozenset[Permutation]:
    if n < len(t.root):
        return frozenset()
    out = []
    for p in den.closure[n]:
        root, kids = den.split(p)
        if root != t.root:
            continue
        if all(kid in den.members(child, len(kid)) for kid, child in zip(kids, t.children)):
            out.append(p)
    return frozenset(out)


def _overlap_witness(parts) -> str:
    seen: dict[Permutation, str] = {}
    for label, ms in parts:
        for p in ms:
            if p in seen:
                return f"{p} belongs to both {seen[p]} and {label}"
            seen[p] = label
    return "unknown"
