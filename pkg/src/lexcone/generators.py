"""The canonical generating set of the cone and the decomposition algorithm.

Generators are the basis vectors e_s together with the two-point vectors
e_s - lam*e_t for s < t and lam > 0.  Every positive vector is a positive
combination of these; `decompose` produces one constructively and checks the
recombination exactly before returning it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import NotPositive, PosetMismatch, VerificationError
from .lexvec import LexVector, is_positive
from .poset import Poset
from .rationals import RationalLike, as_fraction, format_rational


@dataclass(frozen=True)
class Single:
    """The basis generator e_s."""

    label: str

    def vector(self, P: Poset) -> LexVector:
        return LexVector.basis(P, self.label)

    def validate(self, P: Poset) -> None:
        if self.label not in P:
            raise ValueError(f"unknown label {self.label!r}")

    def to_json(self) -> dict:
        return {"single": self.label}


@dataclass(frozen=True)
class Pair:
    """The generator e_s - lam*e_t, requiring s < t and lam > 0."""

    lower: str
    upper: str
    lam: Fraction

    def vector(self, P: Poset) -> LexVector:
        return LexVector(P, {self.lower: 1, self.upper: -self.lam})

    def validate(self, P: Poset) -> None:
        if not P.lt(self.lower, self.upper):
            raise ValueError(f"pair generator needs {self.lower!r} < {self.upper!r}")
        if self.lam <= 0:
            raise ValueError("pair generator needs lam > 0")

    def to_json(self) -> dict:
        return {"pair": [self.lower, self.upper, format_rational(self.lam)]}


Generator = Union[Single, Pair]


def generator_from_json(data: dict) -> Generator:
    if "single" in data:
        return Single(data["single"])
    if "pair" in data:
        s, t, lam = data["pair"]
        return Pair(s, t, as_fraction(lam))
    raise ValueError(f"not a generator: {data!r}")


@dataclass
class Decomposition:
    """A positive combination sum(mu_i * gen_i) with exact recombination."""

    terms: list[tuple[Fraction, Generator]]

    def recombine(self, P: Poset) -> LexVector:
        out = LexVector.zero(P)
        for mu, gen in self.terms:
            out = out + gen.vector(P).scale(mu)
        return out

    def validate(self, P: Poset) -> None:
        for mu, gen in self.terms:
            if mu <= 0:
                raise ValueError("decomposition coefficients must be positive")
            gen.validate(P)
            if not is_positive(gen.vector(P)):
                raise ValueError(f"generator {gen} is not positive")

    def to_json(self) -> list:
        return [{"mu": format_rational(mu), "gen": gen.to_json()} for mu, gen in self.terms]

    @classmethod
    def from_json(cls, data: Sequence) -> "Decomposition":
        return cls([(as_fraction(item["mu"]), generator_from_json(item["gen"])) for item in data])


def pivot_split(P: Poset, f: LexVector) -> tuple[str, LexVector, LexVector]:
    """Pick the pivot s and split f into f|[s> and the rest.

    s is the least label among the minimal elements of supp(f); positivity
    of f forces f(s) > 0 there.  Both halves of the split are positive again,
    which is what keeps the recursion in `decompose` going.
    """
    support = f.support()
    minimal = [s for s in support if not (f.poset.down_set(s) & support)]
    s = min(minimal)
    up = P.up_set(s)
    return s, f.restrict(up), f.restrict(f.support() - up)


def decompose(P: Poset, f: LexVector) -> Decomposition:
    """Write a positive vector as a positive combination of generators.

    Repeatedly split off the part above a minimal support pivot s: values at
    t > s with f(t) > 0 become Single(t) terms; negative values at t > s are
    paid for by splitting f(s) evenly into Pair(s, t, .) terms.
    """
    if f.poset != P:
        raise PosetMismatch("vector does not live on the given poset")
    if not is_positive(f):
        raise NotPositive("vector fails the positivity predicate")
    terms: list[tuple[Fraction, Generator]] = []
    work = f
    while not work.is_zero():
        s, above, rest = pivot_split(P, work)
        assert is_positive(above) and is_positive(rest)
        t_pos = sorted(t for t in above.support() - {s} if above[t] > 0)
        t_neg = sorted(t for t in above.support() - {s} if above[t] < 0)
        for t in t_pos:
            terms.append((above[t], Single(t)))
        if not t_neg:
            terms.append((above[s], Single(s)))
        else:
            share = above[s] / len(t_neg)
            for t in t_neg:
                lam = -above[t] / share
                terms.append((share, Pair(s, t, lam)))
        work = rest
    dec = Decomposition(terms)
    dec.validate(P)
    if dec.recombine(P) != f:
        raise VerificationError("decomposition does not recombine to its input")
    return dec


def _random_rational(rng: random.Random, allow_zero: bool = False) -> Fraction:
    num = rng.randint(0 if allow_zero else 1, 6)
    den = rng.randint(1, 4)
    return Fraction(num, den)


def random_generator(P: Poset, rng: random.Random) -> Generator:
    """A uniform-ish random generator; pairs need some related pair to exist."""
    related = [(s, t) for s in P.elements for t in sorted(P.strict_up_set(s))]
    if related and rng.random() < 0.5:
        s, t = rng.choice(related)
        return Pair(s, t, _random_rational(rng))
    return Single(rng.choice(P.elements))


def random_positive_from(P: Poset, rng: random.Random, size: int) -> LexVector:
    """A random nonnegative combination of `size` random generators."""
    out = LexVector.zero(P)
    if not P.elements:
        return out
    for _ in range(size):
        mu = _random_rational(rng, allow_zero=True)
        out = out + random_generator(P, rng).vector(P).scale(mu)
    return out


def random_positive(P: Poset, seed, size: int) -> LexVector:
    """Reproducible positive sample: same (seed, size) gives the same vector."""
    return random_positive_from(P, random.Random(seed), size)
