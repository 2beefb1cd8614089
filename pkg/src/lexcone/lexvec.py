"""Sparse exact-rational vectors over a poset and the positivity predicate.

A vector f is positive when every label carrying a negative value has some
strictly smaller label carrying a positive one.  On a chain this is the
lexicographic order, on an antichain the entrywise one.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import NotApplicable, PosetMismatch, UnknownLabel
from .poset import Poset
from .rationals import RationalLike, as_fraction, format_rational

ZERO = Fraction(0)


class LexVector:
    """Finitely supported exact-rational function on a poset's elements.

    Immutable by convention: all operations return new vectors.  Only nonzero
    coefficients are stored.
    """

    __slots__ = ("poset", "_coeffs")

    def __init__(self, poset: Poset, coeffs: Mapping[str, RationalLike] = ()):
        self.poset = poset
        clean: dict[str, Fraction] = {}
        for label, value in dict(coeffs).items():
            if label not in poset:
                raise UnknownLabel(f"coefficient on unknown label {label!r}")
            q = as_fraction(value)
            if q != 0:
                clean[label] = q
        self._coeffs = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, poset: Poset) -> "LexVector":
        return cls(poset)

    @classmethod
    def basis(cls, poset: Poset, label: str) -> "LexVector":
        """The indicator vector e_label."""
        return cls(poset, {label: 1})

    @classmethod
    def from_json(cls, poset: Poset, data: Mapping[str, str]) -> "LexVector":
        return cls(poset, data)

    def to_json(self) -> dict[str, str]:
        return {s: format_rational(q) for s, q in sorted(self._coeffs.items())}

    # -- queries ---------------------------------------------------------

    def __getitem__(self, label: str) -> Fraction:
        if label not in self.poset:
            raise UnknownLabel(f"unknown label {label!r}")
        return self._coeffs.get(label, ZERO)

    def support(self) -> frozenset[str]:
        return frozenset(self._coeffs)

    def items(self) -> Iterator[tuple[str, Fraction]]:
        return iter(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LexVector):
            return NotImplemented
        return self.poset == other.poset and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.poset, tuple(sorted(self._coeffs.items()))))

    def __repr__(self) -> str:
        terms = " + ".join(f"{format_rational(q)}*e_{s}" for s, q in self.items()) or "0"
        return f"<LexVector {terms}>"

    # -- arithmetic --------------------------------------------------------

    def _check_same_poset(self, other: "LexVector") -> None:
        if self.poset != other.poset:
            raise PosetMismatch("vectors live on different posets")

    def __add__(self, other: "LexVector") -> "LexVector":
        if not isinstance(other, LexVector):
            return NotImplemented
        self._check_same_poset(other)
        out = dict(self._coeffs)
        for s, q in other._coeffs.items():
            out[s] = out.get(s, ZERO) + q
        return LexVector(self.poset, out)

    def __sub__(self, other: "LexVector") -> "LexVector":
        if not isinstance(other, LexVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LexVector":
        return LexVector(self.poset, {s: -q for s, q in self._coeffs.items()})

    def scale(self, factor: RationalLike) -> "LexVector":
        q = as_fraction(factor)
        return LexVector(self.poset, {s: q * v for s, v in self._coeffs.items()})

    def __mul__(self, factor: RationalLike) -> "LexVector":
        return self.scale(factor)

    __rmul__ = __mul__

    def restrict(self, labels) -> "LexVector":
        """Zero out all coefficients outside `labels` (same poset)."""
        keep = set(labels)
        return LexVector(self.poset, {s: q for s, q in self._coeffs.items() if s in keep})

    def on_poset(self, other: Poset) -> "LexVector":
        """Move the vector to another poset carrying all of its support."""
        return LexVector(other, dict(self._coeffs))


def is_positive(f: LexVector) -> bool:
    """Cone membership: every negative coefficient sees a positive one strictly below."""
    positives = [s for s, q in f._coeffs.items() if q > 0]
    for s, q in f._coeffs.items():
        if q < 0:
            down = f.poset.down_set(s)
            if not any(t in down for t in positives):
                return False
    return True


def leq(f: LexVector, g: LexVector) -> bool:
    """f <= g in the order generated by the cone."""
    return is_positive(g - f)


def lt(f: LexVector, g: LexVector) -> bool:
    return f != g and leq(f, g)


def pairing(f: LexVector, g: LexVector) -> Fraction:
    """The duality sum over common support."""
    f._check_same_poset(g)
    small, large = (f, g) if len(f._coeffs) <= len(g._coeffs) else (g, f)
    return sum((q * large._coeffs[s] for s, q in small._coeffs.items() if s in large._coeffs), ZERO)


def dual_generators(P: Poset) -> list[LexVector]:
    """Basis vectors at the minimal elements; they span the dual cone."""
    return [LexVector.basis(P, s) for s in sorted(P.minimal_elements())]


def dual_violation_witness(P: Poset, s: str, g: LexVector) -> tuple[LexVector, int]:
    """A positive f with <f, g> < 0, certifying g is outside the dual cone.

    Requires s nonminimal, g pointwise nonnegative and g(s) > 0.  Picks the
    smallest label t < s and the least integer n >= 1 making
    <e_t - n e_s, g> negative.
    """
    down = P.down_set(s)
    if not down:
        raise NotApplicable(f"{s!r} is minimal")
    g._check_same_poset(LexVector.zero(P))
    if any(q < 0 for _, q in g.items()):
        raise ValueError("g must be pointwise nonnegative")
    if g[s] <= 0:
        raise ValueError("g must be strictly positive at s")
    t = min(down)
    # least n >= 1 with g(t) - n*g(s) < 0
    n = max(1, math.floor(g[t] / g[s]) + 1)
    f = LexVector(P, {t: 1}) + LexVector(P, {s: -n})
    if not is_positive(f) or pairing(f, g) >= 0:
        raise AssertionError("constructed witness failed its own checks")
    return f, n
