"""Recursive lexicographic-union terms for finite forests.

A forest and a term determine each other up to isomorphism: each tree root
becomes a one-dimensional layer stacked lexicographically over the term of
whatever sits strictly above it.  `canonical_form` gives a label-free
encoding used to compare forests up to isomorphism; it is computed directly
on the poset, independently of the term conversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import NotAForest
from .poset import Poset, classify_forest


@dataclass(frozen=True)
class RootTerm:
    """One tree: a fresh dimension placed lexicographically below `child`."""

    child: "SumTerm"

    def encode(self) -> str:
        return "(" + self.child.encode() + ")"

    def dimension(self) -> int:
        return 1 + self.child.dimension()

    def to_json(self) -> dict:
        return {"root": self.child.to_json()}


@dataclass(frozen=True)
class SumTerm:
    """An order direct sum of tree terms, kept in canonical encoding order."""

    roots: tuple[RootTerm, ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(self.roots, key=lambda r: r.encode()))
        object.__setattr__(self, "roots", ordered)

    def encode(self) -> str:
        return "".join(r.encode() for r in self.roots)

    def dimension(self) -> int:
        return sum(r.dimension() for r in self.roots)

    def to_json(self) -> dict:
        return {"sum": [r.to_json() for r in self.roots]}

    @classmethod
    def from_json(cls, data: Mapping) -> "SumTerm":
        if not isinstance(data, Mapping) or "sum" not in data:
            raise ValueError('term JSON must be {"sum": [...]}')
        roots = []
        for item in data["sum"]:
            if not isinstance(item, Mapping) or "root" not in item:
                raise ValueError('tree term JSON must be {"root": {...}}')
            roots.append(RootTerm(cls.from_json(item["root"])))
        return cls(tuple(roots))


LexUnionTerm = SumTerm


def forest_to_term(F: Poset) -> SumTerm:
    """One RootTerm per tree root, recursing on the strict up-set of the root."""
    report = classify_forest(F)
    if not report.is_forest:
        raise NotAForest(f"poset has wedge witness {report.witness}")
    roots = []
    for tree in report.trees:
        above = F.induced(F.strict_up_set(tree.root))
        roots.append(RootTerm(forest_to_term(above)))
    return SumTerm(tuple(roots))


def term_to_forest(term: SumTerm) -> Poset:
    """Rebuild a forest with fresh canonical labels n000, n001, ..."""
    elements: list[str] = []
    covers: list[tuple[str, str]] = []
    counter = [0]

    def fresh() -> str:
        label = f"n{counter[0]:03d}"
        counter[0] += 1
        return label

    def emit(sum_term: SumTerm) -> list[str]:
        """Create this forest's elements, returning its roots' labels."""
        created = []
        for root_term in sum_term.roots:
            label = fresh()
            elements.append(label)
            for child_root in emit(root_term.child):
                covers.append((label, child_root))
            created.append(label)
        return created

    emit(term)
    return Poset.from_covers(elements, covers)


def canonical_form(F: Poset) -> str:
    """Label-free encoding; equal exactly for isomorphic forests."""
    report = classify_forest(F)
    if not report.is_forest:
        raise NotAForest(f"poset has wedge witness {report.witness}")

    def encode_tree(root: str, members: frozenset[str]) -> str:
        inner = F.induced(members - {root})
        parts = sorted(encode_tree(t.root, t.members) for t in classify_forest(inner).trees)
        return "(" + "".join(parts) + ")"

    return "".join(sorted(encode_tree(t.root, t.members) for t in report.trees))
