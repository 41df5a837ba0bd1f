"""Exact-arithmetic Lie triple systems.

Verify the defining identities, compute derived series, solvability and
radicals, build the universal enveloping graded Lie algebra and invert it,
and classify 2- and 3-dimensional systems against the built-in catalog of
canonical forms.  All arithmetic is exact over the rationals.
"""

from .catalog import (
    CatalogEntry,
    CyclicMismatch,
    SymmetricForm2D,
    all_entries,
    from_operators,
    from_symmetric_form,
)
from .classify import (
    Fingerprint,
    IsoResult,
    UnsupportedDimension,
    classify,
    fingerprint,
    isomorphic,
)
from .core import (
    AxiomVerdict,
    DerivedSeries,
    InvalidLTS,
    NotAnIdeal,
    TripleSystem,
    check_axioms,
    derived_series,
    derived_subspace,
    direct_sum,
    is_ideal,
    is_subsystem,
    lts_center,
    quotient,
    transform,
    triple_product,
)
from .embed import (
    Decomposition,
    StandardEmbedding,
    decompose,
    inner_derivation,
    is_canonical,
    lts_radical,
    standard_embedding,
)
from .exactla import (
    Matrix,
    Rational,
    SingularMatrix,
    Subspace,
    kernel,
    rref,
    span,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
)
from .formats import ParseError, parse_lie, parse_lts, serialize_lie, serialize_lts
from .lie import (
    Grading,
    InvalidGrading,
    KillingSignature,
    LieAlgebra,
    check_grading,
    check_jacobi,
    killing_form,
    killing_signature,
    lie_center,
    lie_derived_series,
    lie_radical,
    lie_to_lts,
    lower_central_series,
)
from .witness import BACKEND as WITNESS_BACKEND, search_witness

__version__ = "0.1.0"

__all__ = [
    "AxiomVerdict",
    "CatalogEntry",
    "CyclicMismatch",
    "Decomposition",
    "DerivedSeries",
    "Fingerprint",
    "Grading",
    "InvalidGrading",
    "InvalidLTS",
    "IsoResult",
    "KillingSignature",
    "LieAlgebra",
    "Matrix",
    "NotAnIdeal",
    "ParseError",
    "Rational",
    "SingularMatrix",
    "StandardEmbedding",
    "Subspace",
    "SymmetricForm2D",
    "TripleSystem",
    "UnsupportedDimension",
    "WITNESS_BACKEND",
    "all_entries",
    "check_axioms",
    "check_grading",
    "check_jacobi",
    "classify",
    "decompose",
    "derived_series",
    "derived_subspace",
    "direct_sum",
    "fingerprint",
    "from_operators",
    "from_symmetric_form",
    "inner_derivation",
    "is_canonical",
    "is_ideal",
    "is_subsystem",
    "isomorphic",
    "kernel",
    "killing_form",
    "killing_signature",
    "lie_center",
    "lie_derived_series",
    "lie_radical",
    "lie_to_lts",
    "lower_central_series",
    "lts_center",
    "lts_radical",
    "parse_lie",
    "parse_lts",
    "quotient",
    "rref",
    "search_witness",
    "serialize_lie",
    "serialize_lts",
    "span",
    "standard_embedding",
    "subspace_contains",
    "subspace_intersect",
    "subspace_sum",
    "transform",
    "triple_product",
]
