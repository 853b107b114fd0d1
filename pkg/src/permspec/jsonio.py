"""File formats: pattern list files, restriction keys, and the JSON form of
an equation system.

The JSON layout is shared by the ambiguous and the disjoint pipelines:

    {
      "closure_simples": [[2,4,1,3], ...],
      "disjoint": true,
      "equations": [
        {"lhs": {"delta": "", "avoid": [[...], ...], "contain": []},
         "has_one": true,
         "disjoint": true,
         "terms": [{"root": "plus" | "minus" | [..], "children": [key, ...]}]}
      ]
    }

Children reference equations through canonical restriction key strings; the
first equation defines the class itself.  Serialization sorts object keys so
a system always produces the same bytes.
"""

from __future__ import annotations

import json
from typing import Iterable

from .errors import InvalidInputError
from .perms import MINUS, PLUS, Permutation, perm
from .restrictions import Equation, Restriction, RestrictionTerm, restriction
from .system import EquationSystem


def restriction_key(r: Restriction) -> str:
    av = ",".join(p.compact() for p in r.avoid)
    co = ",".join(p.compact() for p in r.contain)
    return f"C{r.delta}<avoid:{av}><contain:{co}>"


def perm_to_obj(p: Permutation) -> list[int]:
    return list(p.values)


def root_to_obj(root: Permutation):
    if root == PLUS:
        return "plus"
    if root == MINUS:
        return "minus"
    return perm_to_obj(root)


def system_to_obj(system: EquationSystem) -> dict:
    return {
        "closure_simples": [perm_to_obj(p) for p in system.simples],
        "disjoint": system.all_disjoint,
        "equations": [
            {
                "lhs": {
                    "delta": lhs.delta,
                    "avoid": [perm_to_obj(p) for p in lhs.avoid],
                    "contain": [perm_to_obj(p) for p in lhs.contain],
                },
                "has_one": eq.has_one,
                "disjoint": eq.disjoint,
                "terms": [
                    {
                        "root": root_to_obj(t.root),
                        "children": [restriction_key(c) for c in t.children],
                    }
                    for t in eq.terms
                ],
            }
            for lhs, eq in system.equations.items()
        ],
    }


def system_from_obj(obj: dict) -> EquationSystem:
    simples = tuple(Permutation(tuple(v)) for v in obj["closure_simples"])
    lhss = []
    for eobj in obj["equations"]:
        lo = eobj["lhs"]
        lhss.append(
            restriction(
                lo["delta"],
                [Permutation(tuple(v)) for v in lo["avoid"]],
                [Permutation(tuple(v)) for v in lo["contain"]],
            )
        )
    by_key = {restriction_key(r): r for r in lhss}
    system = EquationSystem(simples, lhss[0] if lhss else restriction(""))
    for lhs, eobj in zip(lhss, obj["equations"]):
        terms = []
        for tobj in eobj["terms"]:
            robj = tobj["root"]
            root = PLUS if robj == "plus" else MINUS if robj == "minus" else Permutation(tuple(robj))
            children = []
            for key in tobj["children"]:
                if key not in by_key:
                    raise InvalidInputError(f"child {key} is not defined by any equation")
                children.append(by_key[key])
            terms.append(RestrictionTerm(root, tuple(children)))
        system.equations[lhs] = Equation(lhs, eobj["has_one"], tuple(terms), eobj["disjoint"])
    return system


def dumps_system(system: EquationSystem) -> str:
    return json.dumps(system_to_obj(system), indent=2, sort_keys=True) + "\n"


def loads_system(text: str) -> EquationSystem:
    return system_from_obj(json.loads(text))


def parse_perm_text(text: str) -> Permutation:
    """One permutation: space-separated values, or a digit string for n <= 9."""
    try:
        return perm(text)
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse permutation {text!r}: {exc}") from exc


def read_patterns_text(text: str) -> list[Permutation]:
    """Pattern list: one permutation per line, '#' starts a comment."""
    out = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            out.append(parse_perm_text(body))
    return out


def read_patterns_file(path: str) -> list[Permutation]:
    with open(path, encoding="utf-8") as fh:
        return read_patterns_text(fh.read())


def format_perms(perms: Iterable[Permutation]) -> str:
    return "\n".join(str(p) for p in perms)
