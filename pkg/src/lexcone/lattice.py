"""Lattice structure of Lex(S): sup/inf/abs on forests, refutations elsewhere.

On a forest the supremum with zero is computed tree by tree on the support.
On a non-forest there is no supremum: `no_sup_witness` returns a pair with a
`descend` map that turns any upper bound into a strictly smaller one, each
step verified at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IsAForest, NotAForest, NotAnUpperBound, PosetMismatch, VerificationError
from .lexvec import LexVector, is_positive, leq
from .poset import Poset, classify_forest

HALF = Fraction(1, 2)


def _require_forest(P: Poset):
    report = classify_forest(P)
    if not report.is_forest:
        raise NotAForest(f"poset has wedge witness {report.witness}")
    return report


def sup_with_zero(P: Poset, f: LexVector) -> LexVector:
    """f v 0 on a forest poset.

    Work on supp(f) as an induced subposet (itself a forest, possibly with
    different tree components than P): each tree whose root carries a
    positive value contributes f restricted to it, the others contribute
    nothing.
    """
    _require_forest(P)
    if f.poset != P:
        raise PosetMismatch("vector does not live on the given poset")
    support = f.support()
    if not support:
        return LexVector.zero(P)
    sub = P.induced(support)
    result = LexVector.zero(P)
    for tree in classify_forest(sub).trees:
        if f[tree.root] > 0:
            result = result + f.restrict(tree.members)
    return result


def sup(f: LexVector, g: LexVector) -> LexVector:
    """f v g = ((f - g) v 0) + g."""
    return sup_with_zero(f.poset, f - g) + g


def inf(f: LexVector, g: LexVector) -> LexVector:
    """f ^ g = -((-f) v (-g))."""
    return -sup(-f, -g)


def abs_(f: LexVector) -> LexVector:
    """|f| = f v (-f)."""
    return sup(f, -f)


def is_lattice(P: Poset) -> bool:
    """Lex(P) is a vector lattice exactly when P is a forest."""
    return classify_forest(P).is_forest


@dataclass
class DescentChain:
    """The incomparable pair (f, 0) plus successively smaller upper bounds."""

    f: LexVector
    bounds: list[LexVector] = field(default_factory=list)

    def validate(self) -> None:
        zero = LexVector.zero(self.f.poset)
        if leq(self.f, zero) or leq(zero, self.f):
            raise VerificationError("f and 0 are comparable")
        prev = None
        for h in self.bounds:
            if not (leq(self.f, h) and leq(zero, h)):
                raise VerificationError("chain entry is not an upper bound")
            if prev is not None and not (leq(h, prev) and h != prev):
                raise VerificationError("chain entry does not strictly decrease")
            prev = h

    def to_json(self) -> dict:
        return {"f": self.f.to_json(), "chain": [h.to_json() for h in self.bounds]}


class NoSupWitness:
    """Certificate that {f, 0} has no supremum on a non-forest poset.

    `f = e_s - e_t - e_m` for a wedge triple (s, t, m).  `descend` maps any
    verified upper bound of {f, 0} to a strictly smaller verified one, so no
    upper bound can be least.
    """

    def __init__(self, P: Poset):
        report = classify_forest(P)
        if report.is_forest:
            raise IsAForest("poset is a forest; suprema exist")
        self.poset = P
        self.triple = report.witness
        s, t, m = self.triple
        self.f = LexVector(P, {s: 1, t: -1, m: -1})

    def _check_upper_bound(self, h: LexVector, err=NotAnUpperBound) -> None:
        if h.poset != self.poset:
            raise NotAnUpperBound("bound lives on the wrong poset")
        if not is_positive(h):
            raise err("not an upper bound of 0")
        if not leq(self.f, h):
            raise err("not an upper bound of f")

    def descend(self, h: LexVector) -> LexVector:
        """A strictly smaller upper bound than h; both ends verified."""
        self._check_upper_bound(h)
        s, t, m = self.triple
        extra = sorted(h.support() - {s, t, m})
        if extra:
            u = extra[0]
            step = h[u] * HALF if h[u] > 0 else Fraction(1)
            lower = h - LexVector(self.poset, {u: step})
        else:
            lower = h - LexVector.basis(self.poset, m)
        self._check_upper_bound(lower, err=VerificationError)
        if not (leq(lower, h) and lower != h):
            raise VerificationError("descended bound is not strictly smaller")
        return lower

    def start(self) -> LexVector:
        """A canonical first upper bound of {f, 0}: e_s."""
        return LexVector.basis(self.poset, self.triple[0])

    def chain(self, start: LexVector | None = None, steps: int = 50) -> DescentChain:
        h = self.start() if start is None else start
        self._check_upper_bound(h)
        bounds = [h]
        for _ in range(steps):
            h = self.descend(h)
            bounds.append(h)
        chain = DescentChain(self.f, bounds)
        chain.validate()
        return chain


def no_sup_witness(P: Poset) -> NoSupWitness:
    return NoSupWitness(P)
