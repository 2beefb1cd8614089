"""Projective tensor cone over two lexicographic cones.

The linear identification sends e_s (x) f_t to the product-poset basis vector
at "s|t"; under it the projective cone is exactly the positive cone of the
product poset.  `kp_decompose` makes the inclusion constructive: it produces
an explicit sum of tensors of positive vectors flattening back to the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from . import generators
from .errors import NotAProductPoset, NotInCone, PosetMismatch, VerificationError
from .lexvec import LexVector, is_positive
from .poset import PRODUCT_SEP, Poset, product, split_product_label


@dataclass
class TensorRep:
    """A formal sum of elementary tensors sum_i left_i (x) right_i."""

    left_poset: Poset
    right_poset: Poset
    pairs: list[tuple[LexVector, LexVector]]

    def validate(self) -> None:
        for f, g in self.pairs:
            if f.poset != self.left_poset or g.poset != self.right_poset:
                raise PosetMismatch("tensor component on the wrong poset")

    def all_components_positive(self) -> bool:
        return all(is_positive(f) and is_positive(g) for f, g in self.pairs)

    def to_json(self) -> list:
        return [{"left": f.to_json(), "right": g.to_json()} for f, g in self.pairs]

    @classmethod
    def from_json(cls, S: Poset, T: Poset, data: Sequence[Mapping]) -> "TensorRep":
        pairs = [(LexVector(S, item["left"]), LexVector(T, item["right"])) for item in data]
        return cls(S, T, pairs)


def elementary_tensor(f: LexVector, g: LexVector, prod: Poset | None = None) -> LexVector:
    """The vector (s,t) -> f(s)g(t) on the product poset."""
    if prod is None:
        prod = product(f.poset, g.poset)
    coeffs = {}
    for s, a in f.items():
        for t, b in g.items():
            coeffs[f"{s}{PRODUCT_SEP}{t}"] = a * b
    out = LexVector(prod, coeffs)
    return out


def flatten(rep: TensorRep) -> LexVector:
    """Sum of the elementary tensors of a representation."""
    rep.validate()
    prod = product(rep.left_poset, rep.right_poset)
    out = LexVector.zero(prod)
    for f, g in rep.pairs:
        out = out + elementary_tensor(f, g, prod)
    return out


def _check_product_vector(S: Poset, T: Poset, u: LexVector) -> Poset:
    prod = product(S, T)
    if u.poset != prod:
        raise NotAProductPoset("vector does not live on the product of the given posets")
    return prod


def kp_member(S: Poset, T: Poset, u: LexVector) -> bool:
    """Projective-cone membership, decided on the product poset."""
    _check_product_vector(S, T, u)
    return is_positive(u)


def kp_decompose(S: Poset, T: Poset, u: LexVector) -> TensorRep:
    """Represent a member of the projective cone as tensors of positive vectors.

    Decomposes u over the product poset, then rewrites each generator: a pair
    generator moving in one coordinate maps to a single elementary tensor; one
    moving in both splits in two through the intermediate point (s2, t1).
    """
    prod = _check_product_vector(S, T, u)
    if not is_positive(u):
        raise NotInCone("vector is not in the projective cone")
    dec = generators.decompose(prod, u)
    pairs: list[tuple[LexVector, LexVector]] = []
    for mu, gen in dec.terms:
        if isinstance(gen, generators.Single):
            s, t = split_product_label(S, T, gen.label)
            pairs.append((LexVector(S, {s: mu}), LexVector.basis(T, t)))
            continue
        s1, t1 = split_product_label(S, T, gen.lower)
        s2, t2 = split_product_label(S, T, gen.upper)
        alpha = gen.lam
        if s1 == s2:
            pairs.append((LexVector(S, {s1: mu}), LexVector(T, {t1: 1, t2: -alpha})))
        elif t1 == t2:
            pairs.append((LexVector(S, {s1: mu, s2: -mu * alpha}), LexVector.basis(T, t1)))
        else:
            pairs.append((LexVector(S, {s1: mu, s2: -mu}), LexVector.basis(T, t1)))
            pairs.append((LexVector(S, {s2: mu}), LexVector(T, {t1: 1, t2: -alpha})))
    rep = TensorRep(S, T, pairs)
    if not rep.all_components_positive():
        raise VerificationError("tensor decomposition produced a non-positive component")
    if flatten(rep) != u:
        raise VerificationError("tensor decomposition does not flatten to its input")
    return rep
