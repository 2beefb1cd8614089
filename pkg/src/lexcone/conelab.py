"""Finitely generated cones in rational d-space.

Membership and pointedness are exact LP feasibility questions; `lex_embed`
builds an invertible matrix sending every generator to a lex-positive vector,
realising the cone inside the standard lexicographic one.  The two routes of
`kp_pointedness_check` certify that the projective cone of two pointed cones
is pointed: per-sample LP refutation and the wholesale embedding argument.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DimensionMismatch, NoHalfSpace, NotPointed, VerificationError
from .lexvec import LexVector, is_positive
from .linalg import Mat, Vec, dot, mat_vec
from .poset import Poset, product
from .rationals import format_rational
from .tensor import elementary_tensor

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class FinCone:
    """A cone in rational d-space given by finitely many generator vectors."""

    dim: int
    generators: Mat

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch("dimension must be >= 1")
        object.__setattr__(self, "generators", linalg.mat(self.generators))
        for g in self.generators:
            if len(g) != self.dim:
                raise DimensionMismatch(f"generator {g} has wrong length")
            if all(a == 0 for a in g):
                raise ValueError("zero vector cannot be a generator")

    def duplicate_generators(self) -> list[Vec]:
        seen: set[Vec] = set()
        dupes = []
        for g in self.generators:
            if g in seen:
                dupes.append(g)
            seen.add(g)
        return dupes

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "generators": [[format_rational(a) for a in g] for g in self.generators],
        }

    @classmethod
    def from_json(cls, data) -> "FinCone":
        if not isinstance(data, dict) or "dim" not in data or "generators" not in data:
            raise ValueError('cone JSON must have "dim" and "generators" keys')
        return cls(int(data["dim"]), linalg.mat(data["generators"]))


def cone_member(C: FinCone, v: Sequence) -> bool:
    """Is v a nonnegative rational combination of the generators?"""
    return member_certificate(C, v) is not None


def member_certificate(C: FinCone, v: Sequence) -> list[Fraction] | None:
    """The combination coefficients when v is a member, else None."""
    target = linalg.vec(v)
    if len(target) != C.dim:
        raise DimensionMismatch(f"vector length {len(target)} != dim {C.dim}")
    coeffs = linalg.solve_nonneg_combination(C.generators, target)
    if coeffs is not None:
        combo = tuple(
            sum((c * g[i] for c, g in zip(coeffs, C.generators)), ZERO) for i in range(C.dim)
        )
        if combo != target or any(c < 0 for c in coeffs):
            raise VerificationError("feasibility solver returned a bad certificate")
    return coeffs


def dual_vector(C: FinCone) -> Vec:
    """A nonzero functional nonnegative on every generator.

    Searches coordinate directions in canonical order, solving Gx >= 0
    together with x_k >= 1 and then -x_k >= 1; deterministic given the
    generator order.  Raises NoHalfSpace when the wedge is the whole space.
    """
    x = _dual_search(C.dim, C.generators)
    if x is None:
        raise NoHalfSpace("generators positively span the whole space")
    return x


def _dual_search(dim: int, generators: Mat) -> Vec | None:
    for k in range(dim):
        for sign in (ONE, -ONE):
            x = linalg.solve_ge_with_unit(generators, dim, k, sign)
            if x is not None:
                if all(a == 0 for a in x) or any(dot(g, x) < 0 for g in generators):
                    raise VerificationError("dual search returned a bad functional")
                return x
    return None


def is_pointed(C: FinCone) -> bool:
    """No nonzero v has both v and -v in the wedge.

    Equivalent to: no nonzero nonnegative combination of the generators is 0,
    which is one exact feasibility run with a normalisation row.
    """
    columns = [g + (ONE,) for g in C.generators]
    target = tuple([ZERO] * C.dim + [ONE])
    return linalg.solve_nonneg_combination(columns, target) is None


@dataclass(frozen=True)
class LexEmbedding:
    """An invertible matrix mapping every generator to a lex-positive vector."""

    matrix: Mat

    def apply(self, v: Sequence) -> Vec:
        return mat_vec(self.matrix, linalg.vec(v))

    def validate(self, C: FinCone) -> None:
        if linalg.det(self.matrix) == 0:
            raise VerificationError("embedding matrix is singular")
        for g in C.generators:
            if not linalg.is_lex_positive(self.apply(g)):
                raise VerificationError(f"generator {g} does not map lex-positive")

    def to_json(self) -> list:
        return [[format_rational(a) for a in row] for row in self.matrix]


def lex_embed(C: FinCone) -> LexEmbedding:
    """Embed a pointed cone into the standard lexicographic cone.

    Recursive: the first row is a dual functional; generators it kills lie in
    its kernel hyperplane, where the cone is rewritten in d-1 coordinates and
    embedded recursively.  The result is verified (det != 0, all generators
    lex-positive) before returning.
    """
    if not is_pointed(C):
        raise NotPointed("cone is not pointed")
    rows = _embed_rows(C.dim, list(C.generators))
    emb = LexEmbedding(linalg.mat(rows))
    emb.validate(C)
    return emb


def _embed_rows(dim: int, gens: list[Vec]) -> list[Vec]:
    if dim == 0:
        return []
    if not gens:
        return [tuple(ONE if j == i else ZERO for j in range(dim)) for i in range(dim)]
    x = _dual_search(dim, linalg.mat(gens))
    if x is None:  # impossible for a pointed cone in dim >= 1
        raise AssertionError("pointed cone admits no dual functional")
    pivot = next(i for i, a in enumerate(x) if a != 0)
    keep = [j for j in range(dim) if j != pivot]

    def project(v: Vec) -> Vec:
        return tuple(v[j] for j in keep)

    flat_gens = [project(g) for g in gens if dot(g, x) == 0]
    sub_rows = _embed_rows(dim - 1, flat_gens)
    lifted = []
    for row in sub_rows:
        full = [ZERO] * dim
        for value, j in zip(row, keep):
            full[j] = value
        lifted.append(tuple(full))
    return [x] + lifted


def _chain_poset(d: int) -> Poset:
    labels = [f"c{i+1}" for i in range(d)]
    return Poset.chain(labels)


def _grid_vector(prodposet: Poset, d1: int, d2: int, entries: Mat) -> LexVector:
    coeffs = {}
    for i in range(d1):
        for j in range(d2):
            coeffs[f"c{i+1}|c{j+1}"] = entries[i][j]
    return LexVector(prodposet, coeffs)


def _outer(x: Vec, y: Vec) -> Mat:
    return tuple(tuple(a * b for b in y) for a in x)


def _flatten_matrix(u: Mat) -> Vec:
    return tuple(a for row in u for a in row)


def kp_member_general(X: FinCone, Y: FinCone, u: Sequence[Sequence]) -> bool:
    """Is the matrix u a nonnegative combination of the rank-one products g h^T?"""
    U = linalg.mat(u)
    if len(U) != X.dim or any(len(row) != Y.dim for row in U):
        raise DimensionMismatch(f"matrix must be {X.dim} x {Y.dim}")
    columns = [_flatten_matrix(_outer(g, h)) for g in X.generators for h in Y.generators]
    big = FinCone(X.dim * Y.dim, linalg.mat(columns)) if columns else None
    target = _flatten_matrix(U)
    if big is None:
        return all(a == 0 for a in target)
    return cone_member(big, target)


@dataclass
class KpPointednessReport:
    """Outcome of the two pointedness certifications for a pair of cones."""

    x_dim: int
    y_dim: int
    trials: int
    seed: int
    lp_checked: int = 0
    lp_zero_samples: int = 0
    lp_members: int = 0
    lp_violations: int = 0
    embed_pairs_checked: int = 0
    embed_all_lex_positive: bool = False

    @property
    def ok(self) -> bool:
        return self.lp_violations == 0 and self.embed_all_lex_positive

    def to_json(self) -> dict:
        return {
            "x_dim": self.x_dim,
            "y_dim": self.y_dim,
            "trials": self.trials,
            "seed": self.seed,
            "lp_route": {
                "checked": self.lp_checked,
                "zero_samples": self.lp_zero_samples,
                "members": self.lp_members,
                "nonzero_double_members": self.lp_violations,
            },
            "embedding_route": {
                "pairs_checked": self.embed_pairs_checked,
                "all_lex_positive": self.embed_all_lex_positive,
            },
            "pointed_certified": self.ok,
        }


def _trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}:kp:{index}")


def kp_pointedness_check(X: FinCone, Y: FinCone, trials: int, seed: int) -> KpPointednessReport:
    """Certify pointedness of the projective cone of two pointed cones.

    Route 1 samples vectors in the span of the rank-one generators with small
    mixed-sign coefficients and checks that no nonzero sample is a member
    together with its negation.  Route 2 lex-embeds both factors and verifies
    every rank-one generator maps to a positive element of the lexicographic
    cone of the product of two chains, which certifies the whole cone at once.
    """
    if not is_pointed(X):
        raise NotPointed("left cone is not pointed")
    if not is_pointed(Y):
        raise NotPointed("right cone is not pointed")
    report = KpPointednessReport(X.dim, Y.dim, trials, seed)

    # Route 2: wholesale certificate via embeddings.
    ax = lex_embed(X)
    ay = lex_embed(Y)
    grid = product(_chain_poset(X.dim), _chain_poset(Y.dim))
    all_pos = True
    for g in X.generators:
        for h in Y.generators:
            image = _outer(ax.apply(g), ay.apply(h))
            report.embed_pairs_checked += 1
            if not is_positive(_grid_vector(grid, X.dim, Y.dim, image)):
                all_pos = False
    report.embed_all_lex_positive = all_pos

    # Route 1: LP refutation on random span vectors.
    pairs = [(g, h) for g in X.generators for h in Y.generators]
    for index in range(trials):
        rng = _trial_rng(seed, index)
        coeffs = [Fraction(rng.randint(-3, 3)) for _ in pairs]
        u = [[ZERO] * Y.dim for _ in range(X.dim)]
        for c, (g, h) in zip(coeffs, pairs):
            if c:
                for i in range(X.dim):
                    for j in range(Y.dim):
                        u[i][j] += c * g[i] * h[j]
        report.lp_checked += 1
        if all(a == 0 for row in u for a in row):
            report.lp_zero_samples += 1
            continue
        if kp_member_general(X, Y, u):
            report.lp_members += 1
            neg = [[-a for a in row] for row in u]
            if kp_member_general(X, Y, neg):
                report.lp_violations += 1
    return report
