"""Seeded property-check suites behind `lexcone selfcheck` and the acceptance tests.

Each suite re-verifies one family of theorems at a configurable trial count.
Reports contain only deterministic counters and messages, so identical
configurations produce byte-identical JSON.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from . import generators, lattice
from .classify import canonical_form, forest_to_term, term_to_forest
from .conelab import kp_pointedness_check, lex_embed
from .lexvec import (
    LexVector,
    dual_generators,
    dual_violation_witness,
    is_positive,
    leq,
    pairing,
)
from .linalg import det, is_lex_nonnegative, is_lex_positive, mat_vec
from .poset import Poset, classify_forest, product
from .structgen import (
    LABELS,
    iter_all_posets,
    iter_forests_upto_iso,
    random_forest,
    random_non_forest,
    random_pointed_cone,
    random_poset,
    random_positive_vector,
    random_upper_bound,
    random_vector,
)
from .tensor import TensorRep, flatten, kp_decompose, kp_member

# Labeled posets on 0..5 elements; wrong enumeration would break against this.
LABELED_POSET_COUNTS = [1, 1, 3, 19, 219, 4231]

MAX_REPORTED_FAILURES = 20


@dataclass(frozen=True)
class RunConfig:
    """Configuration of a selfcheck run; equal configs give identical reports."""

    seed: int = 0
    trials: int = 500
    max_poset_size: int = 8
    max_dim: int = 4
    suites: tuple[str, ...] | None = None

    def scaled(self, factor: float) -> int:
        return max(1, round(self.trials * factor))


@dataclass
class SuiteResult:
    name: str
    trials: int
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok and len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "checks": self.checks,
            "failures": self.failures,
            "notes": self.notes,
            "ok": self.ok,
        }


def _rng(cfg: RunConfig, suite: str, index: int) -> random.Random:
    return random.Random(f"{cfg.seed}:{suite}:{index}")


def suite_cone_axioms(cfg: RunConfig) -> SuiteResult:
    """Positivity is closed under addition and nonnegative scaling, and pointed."""
    res = SuiteResult("cone_axioms", cfg.scaled(2.0))
    for index in range(res.trials):
        rng = _rng(cfg, "cone_axioms", index)
        P = random_poset(rng, cfg.max_poset_size)
        f = random_positive_vector(rng, P)
        g = random_positive_vector(rng, P, rejection=index % 3 == 0)
        res.check(is_positive(f + g), f"trial {index}: sum not positive")
        for lam in (0, Fraction(1, 2), 3):
            res.check(is_positive(f.scale(lam)), f"trial {index}: {lam} scale not positive")
        h = f - g
        both = is_positive(h) and is_positive(-h)
        res.check(not both or h.is_zero(), f"trial {index}: nonzero h with +-h positive")
    return res


def suite_chain_antichain(cfg: RunConfig) -> SuiteResult:
    """Chains give the lexicographic order, antichains the entrywise one.

    Exhaustive over sign patterns up to dimension 5; positivity only depends
    on signs, so values +-1 cover everything.
    """
    res = SuiteResult("chain_antichain", 0)
    for d in range(1, 6):
        labels = list(LABELS[:d])
        chain = Poset.chain(labels)
        anti = Poset.antichain(labels)
        for signs in iproduct((-1, 0, 1), repeat=d):
            res.trials += 1
            f_chain = LexVector(chain, dict(zip(labels, signs)))
            first = next((s for s in signs if s != 0), 0)
            res.check(
                is_positive(f_chain) == (first >= 0),
                f"chain d={d} signs={signs}",
            )
            f_anti = LexVector(anti, dict(zip(labels, signs)))
            res.check(
                is_positive(f_anti) == all(s >= 0 for s in signs),
                f"antichain d={d} signs={signs}",
            )
    return res


def suite_dual_cone(cfg: RunConfig) -> SuiteResult:
    """Dual generators pair nonnegatively; nonminimal support is refutable."""
    res = SuiteResult("dual_cone", cfg.scaled(1.0))
    for index in range(res.trials):
        rng = _rng(cfg, "dual_cone", index)
        P = random_poset(rng, cfg.max_poset_size)
        f = random_positive_vector(rng, P, rejection=index % 2 == 1)
        gens = dual_generators(P)
        for g in gens:
            res.check(pairing(f, g) >= 0, f"trial {index}: negative pairing with {g!r}")
        combo = LexVector.zero(P)
        for g in gens:
            combo = combo + g.scale(Fraction(rng.randint(0, 4), rng.randint(1, 3)))
        res.check(pairing(f, combo) >= 0, f"trial {index}: negative pairing with combo")

    witnesses = 0
    posets = cfg.scaled(0.2)
    for index in range(posets):
        rng = _rng(cfg, "dual_cone_witness", index)
        P = random_poset(rng, cfg.max_poset_size)
        minimal = P.minimal_elements()
        for s in P.elements:
            if s in minimal:
                continue
            coeffs = {t: Fraction(rng.randint(0, 3)) for t in P.elements}
            coeffs[s] = Fraction(rng.randint(1, 4))
            g = LexVector(P, coeffs)
            fvec, _ = dual_violation_witness(P, s, g)
            witnesses += 1
            res.check(
                is_positive(fvec) and pairing(fvec, g) < 0,
                f"witness trial {index}: bad violation at {s!r}",
            )
    res.notes["witness_posets"] = posets
    res.notes["witnesses_checked"] = witnesses
    return res


def suite_forest_wedge_free(cfg: RunConfig) -> SuiteResult:
    """Forest <=> no wedge subposet, exhaustively on up to 5 labeled elements."""
    res = SuiteResult("forest_wedge_free", 0)
    for n in range(6):
        count = 0
        for P in iter_all_posets(LABELS[:n]):
            count += 1
            res.trials += 1
            report = classify_forest(P)
            res.check(
                report.is_forest == (report.witness is None),
                f"{P!r}: flag/witness disagree",
            )
            if report.witness is not None:
                s, t, m = report.witness
                res.check(
                    P.lt(s, m) and P.lt(t, m) and not P.comparable(s, t),
                    f"{P!r}: invalid wedge witness",
                )
            else:
                members = [e for tree in report.trees for e in tree.members]
                res.check(
                    sorted(members) == list(P.elements),
                    f"{P!r}: trees do not partition",
                )
                for tree in report.trees:
                    mins = {e for e in tree.members if not (P.down_set(e) & tree.members)}
                    res.check(
                        mins == {tree.root},
                        f"{P!r}: tree root {tree.root!r} not the unique minimal",
                    )
                for a_tree in report.trees:
                    for b_tree in report.trees:
                        if a_tree.root >= b_tree.root:
                            continue
                        crossing = any(
                            (P.down_set(a) | {a}) & (P.down_set(b) | {b})
                            for a in a_tree.members
                            for b in b_tree.members
                        )
                        res.check(not crossing, f"{P!r}: trees share a lower bound")
        res.check(
            count == LABELED_POSET_COUNTS[n],
            f"n={n}: enumerated {count} posets, expected {LABELED_POSET_COUNTS[n]}",
        )
    return res


def suite_forest_sup(cfg: RunConfig) -> SuiteResult:
    """sup_with_zero is a least upper bound supported inside supp(f)."""
    res = SuiteResult("forest_sup", cfg.scaled(1.0))
    bounds_per_trial = max(1, cfg.trials // 5)
    res.notes["bounds_per_trial"] = bounds_per_trial
    for index in range(res.trials):
        rng = _rng(cfg, "forest_sup", index)
        P = random_forest(rng, cfg.max_poset_size)
        f = random_vector(rng, P)
        g = lattice.sup_with_zero(P, f)
        zero = LexVector.zero(P)
        res.check(leq(f, g) and leq(zero, g), f"trial {index}: not an upper bound")
        res.check(g.support() <= f.support(), f"trial {index}: support escapes supp(f)")
        for _ in range(bounds_per_trial):
            h = random_upper_bound(rng, P, f, g)
            res.check(leq(g, h), f"trial {index}: sup above sampled bound {h!r}")
    return res


def suite_nonforest_descent(cfg: RunConfig) -> SuiteResult:
    """On non-forests the witness descends through 50 verified upper bounds."""
    res = SuiteResult("nonforest_descent", cfg.scaled(0.2))
    steps = 50
    res.notes["steps"] = steps
    for index in range(res.trials):
        rng = _rng(cfg, "nonforest_descent", index)
        P = random_non_forest(rng, cfg.max_poset_size)
        witness = lattice.no_sup_witness(P)
        start = witness.start() + generators.random_positive_from(P, rng, rng.randint(0, 2))
        chain = witness.chain(start, steps=steps)
        chain.validate()
        res.check(len(chain.bounds) == steps + 1, f"trial {index}: chain too short")
        strict = all(
            leq(b, a) and a != b for a, b in zip(chain.bounds, chain.bounds[1:])
        )
        res.check(strict, f"trial {index}: chain not strictly decreasing")
    return res


def suite_generating_set(cfg: RunConfig) -> SuiteResult:
    """decompose always succeeds on positives and recombines exactly."""
    res = SuiteResult("generating_set", cfg.scaled(2.0))
    for index in range(res.trials):
        rng = _rng(cfg, "generating_set", index)
        P = random_poset(rng, cfg.max_poset_size)
        f = random_positive_vector(rng, P, rejection=index % 2 == 1)
        dec = generators.decompose(P, f)
        res.check(dec.recombine(P) == f, f"trial {index}: recombination mismatch")
        res.check(all(mu > 0 for mu, _ in dec.terms), f"trial {index}: nonpositive mu")
        valid = True
        try:
            dec.validate(P)
        except ValueError:
            valid = False
        res.check(valid, f"trial {index}: invalid generator emitted")
        # The two split positivity claims, re-walked level by level.
        work = f
        splits_ok = True
        while not work.is_zero():
            _, above, rest = generators.pivot_split(P, work)
            if not (is_positive(above) and is_positive(rest)):
                splits_ok = False
                break
            work = rest
        res.check(splits_ok, f"trial {index}: intermediate split not positive")
    return res


def suite_tensor_cone(cfg: RunConfig) -> SuiteResult:
    """Round trip through tensor decomposition; tensors of positives are members."""
    res = SuiteResult("tensor_cone", cfg.scaled(1.0))
    for index in range(res.trials):
        rng = _rng(cfg, "tensor_cone", index)
        S = random_poset(rng, 4)
        T = random_poset(rng, 4)
        prod = product(S, T)
        u = random_positive_vector(rng, prod, rejection=index % 2 == 1)
        rep = kp_decompose(S, T, u)
        res.check(rep.all_components_positive(), f"trial {index}: non-positive component")
        res.check(flatten(rep) == u, f"trial {index}: flatten mismatch")

    members = cfg.scaled(1.0)
    res.notes["membership_trials"] = members
    for index in range(members):
        rng = _rng(cfg, "tensor_member", index)
        S = random_poset(rng, 4)
        T = random_poset(rng, 4)
        pairs = [
            (random_positive_vector(rng, S), random_positive_vector(rng, T))
            for _ in range(rng.randint(0, 3))
        ]
        rep = TensorRep(S, T, pairs)
        res.check(
            kp_member(S, T, flatten(rep)),
            f"membership trial {index}: flatten of positives not a member",
        )
    return res


def suite_kp_main_theorem(cfg: RunConfig) -> SuiteResult:
    """Both pointedness routes succeed for random pointed cone pairs."""
    res = SuiteResult("kp_main_theorem", cfg.scaled(0.1))
    span_trials = cfg.scaled(0.2)
    res.notes["span_vectors_per_pair"] = span_trials
    for index in range(res.trials):
        rng = _rng(cfg, "kp_main_theorem", index)
        X = random_pointed_cone(rng, cfg.max_dim, 5)
        Y = random_pointed_cone(rng, cfg.max_dim, 5)
        report = kp_pointedness_check(X, Y, trials=span_trials, seed=rng.randint(0, 2**31))
        res.check(
            report.embed_all_lex_positive,
            f"pair {index}: embedding route failed",
        )
        res.check(
            report.lp_violations == 0,
            f"pair {index}: found nonzero u with +-u in the projective cone",
        )
    return res


def suite_lex_embed(cfg: RunConfig) -> SuiteResult:
    """lex_embed returns an invertible matrix making every generator lex-positive."""
    res = SuiteResult("lex_embed", cfg.scaled(0.2))
    for index in range(res.trials):
        rng = _rng(cfg, "lex_embed", index)
        C = random_pointed_cone(rng, cfg.max_dim, 6)
        emb = lex_embed(C)
        res.check(det(emb.matrix) != 0, f"trial {index}: singular embedding")
        res.check(
            all(is_lex_positive(emb.apply(g)) for g in C.generators),
            f"trial {index}: generator image not lex-positive",
        )
        lams = [Fraction(rng.randint(0, 3)) for _ in C.generators]
        member = tuple(
            sum((lam * g[i] for lam, g in zip(lams, C.generators)), Fraction(0))
            for i in range(C.dim)
        )
        res.check(
            is_lex_nonnegative(mat_vec(emb.matrix, member)),
            f"trial {index}: member image not lex-nonnegative",
        )
    return res


def suite_classify_roundtrip(cfg: RunConfig) -> SuiteResult:
    """Forest <-> term round trip, exhaustive to 6 nodes plus random to 8."""
    res = SuiteResult("classify_roundtrip", 0)
    for n in range(7):
        for F in iter_forests_upto_iso(n):
            res.trials += 1
            term = forest_to_term(F)
            res.check(term.dimension() == len(F), f"n={n}: wrong dimension")
            rebuilt = term_to_forest(term)
            res.check(
                canonical_form(rebuilt) == canonical_form(F),
                f"n={n}: round trip changed {canonical_form(F)}",
            )
            res.check(lattice.is_lattice(F), f"n={n}: forest not a lattice")
    random_trials = cfg.scaled(0.4)
    res.notes["random_trials"] = random_trials
    for index in range(random_trials):
        rng = _rng(cfg, "classify_roundtrip", index)
        F = random_forest(rng, 8)
        res.trials += 1
        term = forest_to_term(F)
        res.check(term.dimension() == len(F), f"random {index}: wrong dimension")
        rebuilt = term_to_forest(term)
        res.check(
            canonical_form(rebuilt) == canonical_form(F),
            f"random {index}: round trip mismatch",
        )
        f = random_vector(rng, F)
        g = lattice.sup_with_zero(F, f)
        zero = LexVector.zero(F)
        res.check(
            leq(f, g) and leq(zero, g),
            f"random {index}: lattice op failed on forest",
        )
    return res


SUITES = {
    "cone_axioms": suite_cone_axioms,
    "chain_antichain": suite_chain_antichain,
    "dual_cone": suite_dual_cone,
    "forest_wedge_free": suite_forest_wedge_free,
    "forest_sup": suite_forest_sup,
    "nonforest_descent": suite_nonforest_descent,
    "generating_set": suite_generating_set,
    "tensor_cone": suite_tensor_cone,
    "kp_main_theorem": suite_kp_main_theorem,
    "lex_embed": suite_lex_embed,
    "classify_roundtrip": suite_classify_roundtrip,
}


def run_selfcheck(cfg: RunConfig) -> dict:
    names = cfg.suites if cfg.suites else tuple(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}; available: {list(SUITES)}")
    results = {name: SUITES[name](cfg) for name in names}
    failures = sum(len(r.failures) for r in results.values())
    return {
        "config": {
            "seed": cfg.seed,
            "trials": cfg.trials,
            "max_poset_size": cfg.max_poset_size,
            "max_dim": cfg.max_dim,
            "suites": list(names),
        },
        "suites": {name: r.to_json() for name, r in results.items()},
        "failures": failures,
        "ok": failures == 0,
    }
