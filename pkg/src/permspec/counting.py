"""From a specification to its counting sequence.

A disjoint system translates directly to equations on ordinary generating
functions: the atom becomes z, a term becomes the product of its children's
series, a union becomes a sum.  The resulting positive system is solved as a
truncated-series fixed point evaluated in size order: every term has at least
two children of positive valuation, so each coefficient depends only on
strictly smaller ones and a single size-major sweep is exact.  All arithmetic
is arbitrary-precision integer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError, NonDisjointSystemError
from .restrictions import Restriction, restriction
from .system import EquationSystem, SimpleSet, closure_equation


@dataclass(frozen=True)
class GFEquation:
    lhs: Restriction
    has_one: bool
    terms: tuple[tuple[Restriction, ...], ...]


@dataclass(frozen=True)
class GFSystem:
    root: Restriction
    equations: tuple[GFEquation, ...]

    def equation_strings(self) -> list[str]:
        def name(r: Restriction) -> str:
            return f"F[{r}]"

        out = []
        for eq in self.equations:
            parts = (["z"] if eq.has_one else []) + [
                " * ".join(name(c) for c in t) for t in eq.terms
            ]
            out.append(f"{name(eq.lhs)} = {' + '.join(parts) if parts else '0'}")
        return out


def to_gf_system(spec: EquationSystem) -> GFSystem:
    """Translate a disjoint equation system into its generating-function system."""
    if not spec.all_disjoint:
        raise NonDisjointSystemError(
            "system has ambiguous unions; its term sums would overcount"
        )
    eqs = []
    for lhs, eq in spec.equations.items():
        for t in eq.terms:
            if len(t.children) < 2:
                raise InvalidInputError("term with fewer than two children")
        eqs.append(GFEquation(lhs, eq.has_one, tuple(t.children for t in eq.terms)))
    return GFSystem(spec.root, tuple(eqs))


def coefficients(spec: EquationSystem, order: int) -> dict[Restriction, list[int]]:
    """Exact counts c[0..order] for every restriction of the system.

    Size-major evaluation of the fixed point: when size n is processed, every
    product only reads coefficients of sizes below n, which are final.
    """
    if order < 1:
        raise InvalidInputError("order must be at least 1")
    gf = to_gf_system(spec)
    counts: dict[Restriction, list[int]] = {
        eq.lhs: [0] * (order + 1) for eq in gf.equations
    }
    # prefix[t][j] is the series of the product of children 0..j of term t
    prefix: dict[tuple[Restriction, int, int], list[int]] = {}
    for eq in gf.equations:
        for ti, t in enumerate(eq.terms):
            for j in range(1, len(t)):
                prefix[(eq.lhs, ti, j)] = [0] * (order + 1)
    for n in range(1, order + 1):
        for eq in gf.equations:
            total = 1 if (eq.has_one and n == 1) else 0
            for ti, t in enumerate(eq.terms):
                prev = counts[t[0]]
                for j in range(1, len(t)):
                    arr = prefix[(eq.lhs, ti, j)]
                    cj = counts[t[j]]
                    arr[n] = sum(prev[n - m] * cj[m] for m in range(1, n))
                    prev = arr
                total += prev[n]
            counts[eq.lhs][n] = total
    for lhs, arr in counts.items():
        if arr[0] != 0 or arr[1] not in (0, 1):
            raise AssertionError(f"count table for {lhs} violates c0=0, c1<=1")
    return counts


def class_counts(spec: EquationSystem, order: int) -> list[int]:
    """Counting sequence of the class itself, c[0..order]."""
    return coefficients(spec, order)[spec.root]


def substitution_closed_spec(simples: SimpleSet) -> EquationSystem:
    """The three-equation specification of a substitution-closed class."""
    system = EquationSystem(simples.simples, restriction(""))
    for delta in ("", "+", "-"):
        eq = closure_equation(delta, simples)
        system.equations[eq.lhs] = eq
    return system


def convolve(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai:
            for j, bj in enumerate(b[: order + 1 - i]):
                if bj:
                    out[i + j] += ai * bj
    return out


def quadratic_residual(simples: SimpleSet, order: int) -> list[int]:
    """Truncated residual of the closed quadratic satisfied by the counting
    series C(z) of a substitution-closed class:

        C^2 + (S(C) - 1 + z) * C + S(C) + z

    where S collects one z^|p| per simple permutation p.  A correct series
    makes every coefficient through the order vanish.
    """
    c = class_counts(substitution_closed_spec(simples), order)
    s_by_size: dict[int, int] = {}
    for p in simples.simples:
        s_by_size[len(p)] = s_by_size.get(len(p), 0) + 1
    s_of_c = [0] * (order + 1)
    power = [0] * (order + 1)
    power[0] = 1
    for m in range(1, max(s_by_size, default=0) + 1):
        power = convolve(power, c, order)
        mult = s_by_size.get(m, 0)
        if mult:
            for i in range(order + 1):
                s_of_c[i] += mult * power[i]
    residual = convolve(c, c, order)
    linear = list(s_of_c)
    linear[0] -= 1
    if order >= 1:
        linear[1] += 1
    for i, v in enumerate(convolve(linear, c, order)):
        residual[i] += v
    for i in range(order + 1):
        residual[i] += s_of_c[i]
    if order >= 1:
        residual[1] += 1
    return residual
