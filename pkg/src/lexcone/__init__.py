"""Exact-arithmetic lexicographic cones over finite posets."""

from .classify import LexUnionTerm, RootTerm, SumTerm, canonical_form, forest_to_term, term_to_forest
from .conelab import (
    FinCone,
    KpPointednessReport,
    LexEmbedding,
    cone_member,
    dual_vector,
    is_pointed,
    kp_member_general,
    kp_pointedness_check,
    lex_embed,
    member_certificate,
)
from .errors import (
    CycleError,
    DimensionMismatch,
    IsAForest,
    LexconeError,
    NoHalfSpace,
    NotAForest,
    NotAProductPoset,
    NotAnUpperBound,
    NotApplicable,
    NotInCone,
    NotPointed,
    NotPositive,
    PosetMismatch,
    UnknownLabel,
    VerificationError,
)
from .generators import Decomposition, Pair, Single, decompose, random_positive
from .lattice import (
    DescentChain,
    NoSupWitness,
    abs_,
    inf,
    is_lattice,
    no_sup_witness,
    sup,
    sup_with_zero,
)
from .lexvec import (
    LexVector,
    dual_generators,
    dual_violation_witness,
    is_positive,
    leq,
    lt,
    pairing,
)
from .poset import ForestReport, Poset, TreeBlock, classify_forest, product, split_product_label
from .selfcheck import RunConfig, run_selfcheck
from .tensor import TensorRep, elementary_tensor, flatten, kp_decompose, kp_member

__version__ = "0.1.0"
