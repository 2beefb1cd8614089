"""Finite posets: construction, order queries, forest structure, products.

A poset is stored with its full strict order (the transitive closure of the
covers it was built from).  Elements are string labels; the lexicographic
order on labels is the canonical tie-break everywhere, so all outputs are
deterministic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import CycleError, UnknownLabel

# Separator used to build product-poset labels "s|t"; user-facing
# constructors reject labels containing it.
PRODUCT_SEP = "|"


class Poset:
    """An immutable finite strict partial order on string labels."""

    __slots__ = ("elements", "_below", "_above", "_hash")

    def __init__(self, elements: Iterable[str], below: Mapping[str, frozenset[str]]):
        # Internal constructor: `below[s]` must already be the full strict
        # down-set of s.  Use from_covers for validated construction.
        self.elements: tuple[str, ...] = tuple(sorted(elements))
        self._below: dict[str, frozenset[str]] = {s: frozenset(below.get(s, ())) for s in self.elements}
        above: dict[str, set[str]] = {s: set() for s in self.elements}
        for s, down in self._below.items():
            if s in down:
                raise CycleError(f"element {s!r} is below itself")
            for t in down:
                above[t].add(s)
        self._above: dict[str, frozenset[str]] = {s: frozenset(ts) for s, ts in above.items()}
        self._hash: int | None = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_covers(cls, elements: Iterable[str], covers: Iterable[Sequence[str]]) -> "Poset":
        """Build a poset from its Hasse data: labels plus cover pairs (a, b) meaning a < b.

        The strict order is the transitive closure of the covers.  Raises
        CycleError if the closure would contain a cycle and UnknownLabel if a
        cover mentions a label not in `elements`.
        """
        labels = list(elements)
        label_set = set(labels)
        if len(label_set) != len(labels):
            dupes = sorted({s for s in labels if labels.count(s) > 1})
            raise ValueError(f"duplicate labels: {dupes}")
        for s in labels:
            if not isinstance(s, str):
                raise TypeError(f"labels must be strings, got {type(s).__name__}")
            if PRODUCT_SEP in s:
                raise ValueError(f"label {s!r} contains reserved separator {PRODUCT_SEP!r}")
        succ: dict[str, set[str]] = {s: set() for s in labels}
        for pair in covers:
            a, b = pair
            for s in (a, b):
                if s not in label_set:
                    raise UnknownLabel(f"cover references unknown label {s!r}")
            succ[a].add(b)
        # Transitive closure by DFS from each element.
        below: dict[str, set[str]] = {s: set() for s in labels}
        for start in labels:
            seen: set[str] = set()
            stack = list(succ[start])
            while stack:
                t = stack.pop()
                if t in seen:
                    continue
                seen.add(t)
                stack.extend(succ[t])
            if start in seen:
                raise CycleError(f"relation has a cycle through {start!r}")
            for t in seen:
                below[t].add(start)
        return cls(labels, {s: frozenset(ts) for s, ts in below.items()})

    @classmethod
    def from_strict_relation(cls, elements: Iterable[str], less: Iterable[Sequence[str]]) -> "Poset":
        """Build from an already transitive strict relation (validated)."""
        labels = sorted(elements)
        below: dict[str, set[str]] = {s: set() for s in labels}
        for a, b in less:
            if a not in below or b not in below:
                raise UnknownLabel(f"relation references unknown label {a!r} or {b!r}")
            below[b].add(a)
        P = cls(labels, {s: frozenset(ts) for s, ts in below.items()})
        P._check_transitive()
        return P

    def _check_transitive(self) -> None:
        for s in self.elements:
            for t in self._below[s]:
                if not self._below[t] <= self._below[s]:
                    raise CycleError(f"relation is not transitive at {t!r} < {s!r}")

    @classmethod
    def antichain(cls, elements: Iterable[str]) -> "Poset":
        return cls.from_covers(elements, [])

    @classmethod
    def chain(cls, elements: Sequence[str]) -> "Poset":
        """Total order with elements[0] < elements[1] < ..."""
        return cls.from_covers(elements, list(zip(elements, elements[1:])))

    # -- basic queries -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, label: str) -> bool:
        return label in self._below

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self._below == other._below

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.elements, tuple(sorted((s, tuple(sorted(d))) for s, d in self._below.items()))))
        return self._hash

    def __repr__(self) -> str:
        return f"Poset({list(self.elements)}, covers={self.covers()})"

    def _require(self, label: str) -> None:
        if label not in self._below:
            raise UnknownLabel(f"unknown label {label!r}")

    def lt(self, s: str, t: str) -> bool:
        """True iff s < t."""
        self._require(s)
        self._require(t)
        return s in self._below[t]

    def leq(self, s: str, t: str) -> bool:
        """True iff s <= t."""
        self._require(s)
        self._require(t)
        return s == t or s in self._below[t]

    def comparable(self, s: str, t: str) -> bool:
        return s == t or self.lt(s, t) or self.lt(t, s)

    def down_set(self, s: str) -> frozenset[str]:
        """The strict lower set {t : t < s}."""
        self._require(s)
        return self._below[s]

    def up_set(self, s: str) -> frozenset[str]:
        """The weak upper set {t : t >= s}."""
        self._require(s)
        return self._above[s] | {s}

    def strict_up_set(self, s: str) -> frozenset[str]:
        """{t : t > s}."""
        self._require(s)
        return self._above[s]

    def up_set_complement(self, s: str) -> frozenset[str]:
        """All elements not >= s."""
        return frozenset(self.elements) - self.up_set(s)

    def minimal_elements(self) -> frozenset[str]:
        return frozenset(s for s in self.elements if not self._below[s])

    def covers(self) -> list[tuple[str, str]]:
        """Recover the Hasse covers: s covered by t iff s < t with nothing between."""
        out = []
        for t in self.elements:
            down = self._below[t]
            for s in sorted(down):
                if not any(s in self._below[u] for u in down):
                    out.append((s, t))
        return sorted(out)

    # -- structure ---------------------------------------------------------

    def induced(self, labels: Iterable[str]) -> "Poset":
        """The induced subposet on a subset of elements."""
        keep = set(labels)
        for s in keep:
            self._require(s)
        return Poset(keep, {s: self._below[s] & keep for s in keep})

    def disjoint_union(self, other: "Poset") -> "Poset":
        overlap = set(self.elements) & set(other.elements)
        if overlap:
            raise ValueError(f"label sets overlap: {sorted(overlap)}")
        below = dict(self._below)
        below.update(other._below)
        return Poset(self.elements + other.elements, below)

    def linear_extension(self) -> list[str]:
        """A total order extending the poset; ties broken by label order."""
        indegree = {s: len(self._below[s]) for s in self.elements}
        # Kahn's algorithm with a heap keyed by label.
        ready = [s for s in self.elements if indegree[s] == 0]
        heapq.heapify(ready)
        out: list[str] = []
        while ready:
            s = heapq.heappop(ready)
            out.append(s)
            for t in self._above[s]:
                indegree[t] -= 1
                if indegree[t] == 0:
                    heapq.heappush(ready, t)
        if len(out) != len(self.elements):  # cannot happen: construction is acyclic
            raise CycleError("relation has a cycle")
        return out

    # -- serialisation -----------------------------------------------------

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(c) for c in self.covers()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Poset":
        if not isinstance(data, Mapping) or "elements" not in data or "covers" not in data:
            raise ValueError('poset JSON must have "elements" and "covers" keys')
        return cls.from_covers(data["elements"], data["covers"])


@dataclass(frozen=True)
class TreeBlock:
    """One tree of a forest: its root and its full element set."""

    root: str
    members: frozenset[str]


@dataclass(frozen=True)
class ForestReport:
    """Result of classify_forest.

    If the poset is not a forest, `witness` is a triple (s, t, m) with
    s < m, t < m and s, t incomparable.  If it is a forest, `trees` holds the
    partition into trees, each with its unique minimal element as root.
    """

    is_forest: bool
    witness: tuple[str, str, str] | None
    trees: tuple[TreeBlock, ...] | None


def classify_forest(P: Poset) -> ForestReport:
    """Decide forestness two independent ways and report the structure.

    Forest test: every strict down-set is totally ordered.  Witness search:
    scan for s, t incomparable with a common strict upper bound m.  The two
    must agree; disagreement would be a bug.
    """
    is_forest = True
    for s in P.elements:
        down = sorted(P.down_set(s))
        for i, a in enumerate(down):
            for b in down[i + 1:]:
                if not P.comparable(a, b):
                    is_forest = False
                    break
            if not is_forest:
                break
        if not is_forest:
            break

    witness = None
    for m in P.elements:  # independent brute-force scan, canonical order
        down = sorted(P.down_set(m))
        for i, s in enumerate(down):
            for t in down[i + 1:]:
                if not P.comparable(s, t):
                    witness = (s, t, m)
                    break
            if witness:
                break
        if witness:
            break

    if is_forest == (witness is not None):
        raise AssertionError("forest test and wedge-witness search disagree")

    if not is_forest:
        return ForestReport(False, witness, None)

    # Partition into trees: in a forest, <s] is a chain, so each element has
    # a unique minimal element below-or-equal to it — its tree's root.
    root_of: dict[str, str] = {}
    for s in P.elements:
        chain = sorted(P.down_set(s) | {s}, key=lambda t: len(P.down_set(t)))
        root_of[s] = chain[0]
    groups: dict[str, set[str]] = {}
    for s, r in root_of.items():
        groups.setdefault(r, set()).add(s)
    trees = tuple(TreeBlock(r, frozenset(members)) for r, members in sorted(groups.items()))
    return ForestReport(True, None, trees)


def product(P: Poset, Q: Poset) -> Poset:
    """The product poset on labels "s|t": componentwise order.

    (s1,t1) < (s2,t2) iff s1 <= s2, t1 <= t2 and the pairs differ.
    """
    labels = [f"{s}{PRODUCT_SEP}{t}" for s in P.elements for t in Q.elements]
    below: dict[str, set[str]] = {l: set() for l in labels}
    for s2 in P.elements:
        s_lower = P.down_set(s2) | {s2}
        for t2 in Q.elements:
            t_lower = Q.down_set(t2) | {t2}
            key = f"{s2}{PRODUCT_SEP}{t2}"
            for s1 in s_lower:
                for t1 in t_lower:
                    if (s1, t1) != (s2, t2):
                        below[key].add(f"{s1}{PRODUCT_SEP}{t1}")
    return Poset(labels, {l: frozenset(d) for l, d in below.items()})


def split_product_label(P: Poset, Q: Poset, label: str) -> tuple[str, str]:
    """Invert the "s|t" pairing against the factors' element sets.

    Raises ValueError if the label does not split, or splits ambiguously
    (possible only when factor labels themselves contain the separator).
    """
    matches = []
    pos = label.find(PRODUCT_SEP)
    while pos != -1:
        s, t = label[:pos], label[pos + 1:]
        if s in P and t in Q:
            matches.append((s, t))
        pos = label.find(PRODUCT_SEP, pos + 1)
    if len(matches) != 1:
        kind = "ambiguous" if matches else "unsplittable"
        raise ValueError(f"{kind} product label {label!r}")
    return matches[0]
