"""Random and exhaustive generation of posets, vectors and cones.

Everything is driven by an explicit random.Random so that runs are
reproducible; the exhaustive enumerators back the small-scale completeness
suites.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterator, Sequence

from . import generators
from .classify import canonical_form
from .conelab import FinCone, is_pointed
from .lexvec import LexVector, is_positive, leq
from .poset import Poset, classify_forest

LABELS = "abcdefghijklmnop"


def random_poset(rng: random.Random, max_size: int, min_size: int = 1) -> Poset:
    n = rng.randint(min_size, max_size)
    labels = list(LABELS[:n])
    order = labels[:]
    rng.shuffle(order)
    density = rng.choice([0.15, 0.3, 0.5])
    relations = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                relations.append((order[i], order[j]))
    return Poset.from_covers(labels, relations)


def random_forest(rng: random.Random, max_size: int, min_size: int = 1) -> Poset:
    """Attach each node either as a new root or under an earlier node."""
    n = rng.randint(min_size, max_size)
    labels = list(LABELS[:n])
    order = labels[:]
    rng.shuffle(order)
    covers = []
    for i in range(1, n):
        if rng.random() < 0.75:
            covers.append((order[rng.randint(0, i - 1)], order[i]))
    return Poset.from_covers(labels, covers)


def random_non_forest(rng: random.Random, max_size: int) -> Poset:
    size = max(3, max_size)
    for _ in range(40):
        P = random_poset(rng, size, min_size=3)
        if not classify_forest(P).is_forest:
            return P
    # Rare fallback: plant an explicit wedge on three random labels.
    n = rng.randint(3, size)
    labels = list(LABELS[:n])
    order = labels[:]
    rng.shuffle(order)
    P = Poset.from_covers(labels, [(order[0], order[2]), (order[1], order[2])])
    assert not classify_forest(P).is_forest
    return P


def _random_value(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-6, 6), rng.randint(1, 4))


def random_vector(rng: random.Random, P: Poset, density: float = 0.6) -> LexVector:
    coeffs = {s: _random_value(rng) for s in P.elements if rng.random() < density}
    return LexVector(P, coeffs)


def random_positive_vector(rng: random.Random, P: Poset, rejection: bool = False) -> LexVector:
    """Positive sample, either generator-built or rejection-sampled."""
    if not rejection:
        return generators.random_positive_from(P, rng, size=rng.randint(0, 2 * len(P) or 1))
    for _ in range(60):
        f = random_vector(rng, P)
        if is_positive(f):
            return f
    f = random_vector(rng, P)
    return LexVector(P, {s: abs(q) for s, q in f.items()})  # pointwise abs is always positive


def random_upper_bound(
    rng: random.Random, P: Poset, f: LexVector, supremum: LexVector
) -> LexVector:
    """An upper bound of {f, 0}, by rejection when possible, else by perturbation."""
    zero = LexVector.zero(P)
    if rng.random() < 0.5:
        for _ in range(8):
            h = random_vector(rng, P)
            if leq(f, h) and leq(zero, h):
                return h
    bump = generators.random_positive_from(P, rng, size=rng.randint(0, 3))
    return supremum + bump


def random_pointed_cone(rng: random.Random, max_dim: int, max_gens: int) -> FinCone:
    d = rng.randint(1, max_dim)
    n = rng.randint(1, max_gens)
    for _ in range(30):
        gens = []
        for _ in range(n):
            v = [Fraction(rng.randint(-3, 3)) for _ in range(d)]
            if any(a != 0 for a in v):
                gens.append(v)
        if not gens:
            continue
        C = FinCone(d, gens)
        if is_pointed(C):
            return C
    # Fallback: positive first coordinates force pointedness.
    gens = []
    for _ in range(n):
        v = [Fraction(rng.randint(-3, 3)) for _ in range(d)]
        v[0] = Fraction(abs(v[0]) + 1)
        gens.append(v)
    C = FinCone(d, gens)
    assert is_pointed(C)
    return C


def iter_all_posets(labels: Sequence[str]) -> Iterator[Poset]:
    """Every labeled poset on the given labels, by one-element extensions.

    For n = 0..5 the counts are 1, 1, 3, 19, 219, 4231.
    """
    labels = list(labels)
    if not labels:
        yield Poset([], {})
        return
    *init, x = labels
    for P in iter_all_posets(init):
        members = P.elements
        down_closed = [
            D
            for r in range(len(members) + 1)
            for D in map(frozenset, itertools.combinations(members, r))
            if all(P.down_set(d) <= D for d in D)
        ]
        up_closed = [
            U
            for r in range(len(members) + 1)
            for U in map(frozenset, itertools.combinations(members, r))
            if all(P.strict_up_set(u) <= U for u in U)
        ]
        for D in down_closed:
            for U in up_closed:
                if D & U:
                    continue
                if not all(P.lt(d, u) for d in D for u in U):
                    continue
                below = {s: P.down_set(s) for s in members}
                below[x] = D
                for u in U:
                    below[u] = below[u] | {x}
                yield Poset(list(members) + [x], below)


def iter_forests_upto_iso(n: int) -> Iterator[Poset]:
    """One representative per isomorphism class of forests on exactly n nodes."""
    labels = [f"n{i:03d}" for i in range(n)]
    seen: set[str] = set()
    # Parent vectors with parent index below child index reach every class.
    for parents in itertools.product(*(range(-1, i) for i in range(n))):
        covers = [(labels[p], labels[i]) for i, p in enumerate(parents) if p >= 0]
        F = Poset.from_covers(labels, covers)
        key = canonical_form(F)
        if key not in seen:
            seen.add(key)
            yield F
