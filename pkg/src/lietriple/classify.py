"""Basis-independent fingerprints, sound isomorphism testing with explicit
witnesses, and classification against the built-in catalog.

A fingerprint collects only quantities that cannot change under an
invertible change of basis: dimensions of canonical series and radicals,
and the exact signature of the Killing form of the enveloping algebra.
Distinct fingerprints certify non-isomorphism; equal fingerprints decide
nothing by themselves, which is why the isomorphism test is three-valued.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .core import InvalidLTS, TripleSystem, check_axioms, derived_series, lts_center, transform
from .embed import decompose, is_canonical, standard_embedding
from .exactla import Matrix, full_subspace
from .lie import (
    KillingSignature,
    killing_signature,
    lie_center,
    lie_derived_series,
    lower_central_series,
)
from .witness import search_witness

DEFAULT_ISO_BUDGET = 10**6
DEFAULT_CLASSIFY_BUDGET = 20_000


class UnsupportedDimension(ValueError):
    """classify only knows the catalog's 2- and 3-dimensional systems."""


@dataclass(frozen=True)
class Fingerprint:
    """Invariant vector of a triple system and its enveloping algebra."""

    dim_m: int
    m_derived_dims: tuple
    m_center_dim: int
    lts_radical_dim: int
    h_dim: int
    g_dim: int
    g_derived_dims: tuple
    g_lcs_dims: tuple
    g_killing: KillingSignature
    g_radical_dim: int
    g_center_dim: int
    canonical: bool


FINGERPRINT_FIELDS = tuple(f.name for f in dataclasses.fields(Fingerprint))


@dataclass(frozen=True)
class IsoResult:
    verdict: str  # "isomorphic" | "non_isomorphic" | "unknown"
    witness: Matrix | None = None
    separator: str | None = None


def _require_valid(t: TripleSystem):
    verdict = check_axioms(t)
    if not verdict:
        raise InvalidLTS(f"{verdict.kind} identity violated at {verdict.indices}")


def fingerprint(t: TripleSystem) -> Fingerprint:
    """All invariants, computed exactly from one standard embedding."""
    # standard_embedding verifies the axioms (raising InvalidLTS), so no
    # separate validity pass is needed here
    emb = standard_embedding(t)
    g = emb.algebra
    series = derived_series(t, full_subspace(t.dim))
    dec = decompose(emb)
    return Fingerprint(
        dim_m=t.dim,
        m_derived_dims=series.dims,
        m_center_dim=lts_center(t).dim,
        lts_radical_dim=dec.m_prime.dim,
        h_dim=emb.h_dim,
        g_dim=g.dim,
        g_derived_dims=tuple(s.dim for s in lie_derived_series(g)),
        g_lcs_dims=tuple(s.dim for s in lower_central_series(g)),
        g_killing=killing_signature(g),
        g_radical_dim=dec.r.dim,
        g_center_dim=lie_center(g).dim,
        canonical=is_canonical(emb),
    )


def first_separator(a: Fingerprint, b: Fingerprint) -> str | None:
    """Name of the first fingerprint field on which a and b differ."""
    for name in FINGERPRINT_FIELDS:
        if getattr(a, name) != getattr(b, name):
            return name
    return None


def isomorphic(a: TripleSystem, b: TripleSystem, budget: int = DEFAULT_ISO_BUDGET) -> IsoResult:
    """Three-valued isomorphism test.

    Distinct fingerprints give a certified negative with the separating
    field named.  Otherwise a deterministic search for a basis-change
    witness runs up to ``budget`` invertible candidates; a hit is verified
    by an exact transform before being returned.
    """
    _require_valid(a)
    _require_valid(b)
    if a.dim == b.dim and a.c == b.c:
        return IsoResult("isomorphic", Matrix.identity(a.dim))
    fa, fb = fingerprint(a), fingerprint(b)
    sep = first_separator(fa, fb)
    if sep is not None:
        return IsoResult("non_isomorphic", separator=sep)
    T = search_witness(a, b, budget)
    if T is not None:
        if transform(a, T).c != b.c:
            raise AssertionError("search returned a non-witness")
        return IsoResult("isomorphic", T)
    return IsoResult("unknown")


def classify(t: TripleSystem, budget: int = DEFAULT_CLASSIFY_BUDGET) -> list[str]:
    """Labels of catalog entries the system can be: equal fingerprint,
    refined by the bounded isomorphism search where that is conclusive.

    An empty list means no catalog entry shares the fingerprint.  Several
    labels mean the fingerprint (and search, within budget) could not
    separate the tie; the order follows the catalog.
    """
    from . import catalog

    if t.dim not in (2, 3):
        raise UnsupportedDimension("classification covers dimensions 2 and 3 only")
    _require_valid(t)
    fp = fingerprint(t)
    candidates = [e for e in catalog.all_entries() if e.expected == fp]
    if len(candidates) <= 1:
        return [e.label for e in candidates]
    hits = []
    for e in candidates:
        if isomorphic(t, e.system, budget).verdict == "isomorphic":
            hits.append(e.label)
    if hits:
        return hits
    return [e.label for e in candidates]
