"""Lie algebras from structure constants, with the tools the triple-system
side leans on: Jacobi checking, derived/lower-central series, the Killing
form and its exact signature, radical, center, gradings and the passage
from a graded algebra back to a triple system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import TripleSystem
from .exactla import (
    Matrix,
    Subspace,
    ZERO,
    full_subspace,
    kernel,
    span,
    vec,
    vec_is_zero,
    zero_vec,
)


class InvalidGrading(ValueError):
    """The sign vector is not a valid involutive grading of the algebra."""


@dataclass(frozen=True)
class LieAlgebra:
    """Lie algebra given by its bracket tensor f[i][j] = [e_i, e_j]."""

    dim: int
    f: tuple  # f[i][j] -> coordinate vector, 0-based

    def __post_init__(self):
        m = self.dim
        if len(self.f) != m or any(len(fi) != m or any(len(v) != m for v in fi) for fi in self.f):
            raise ValueError("bracket tensor shape does not match dimension")
        for i in range(m):
            if not vec_is_zero(self.f[i][i]):
                raise ValueError(f"[e{i + 1},e{i + 1}] must vanish")
            for j in range(i + 1, m):
                if self.f[i][j] != tuple(-x for x in self.f[j][i]):
                    raise ValueError(f"brackets not antisymmetric at ({i + 1},{j + 1})")

    @staticmethod
    def from_entries(dim: int, entries: dict) -> LieAlgebra:
        """Build from a sparse map {(i, j): vector} with 0-based i < j."""
        f = [[list(zero_vec(dim)) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in entries.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bad bracket index ({i},{j})")
            v = vec(v)
            if len(v) != dim:
                raise ValueError("coordinate vector length mismatch")
            f[i][j] = list(v)
            f[j][i] = [-x for x in v]
        frozen = tuple(tuple(tuple(x for x in v) for v in fi) for fi in f)
        return LieAlgebra(dim, frozen)

    @staticmethod
    def abelian(dim: int) -> LieAlgebra:
        return LieAlgebra.from_entries(dim, {})


@dataclass(frozen=True)
class Grading:
    """Sign vector of an involutive grading: -1 on the triple-system part, +1 on h."""

    signs: tuple  # entries are +1 or -1

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("grading signs must be +1 or -1")

    @property
    def minus_indices(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.signs) if s == -1)

    @property
    def plus_indices(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.signs) if s == 1)


@dataclass(frozen=True)
class KillingSignature:
    positive: int
    negative: int
    zero: int

    def as_tuple(self):
        return (self.positive, self.negative, self.zero)


@dataclass(frozen=True)
class JacobiVerdict:
    ok: bool
    indices: tuple | None = None  # 1-based triple
    residual: tuple | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class GradingVerdict:
    ok: bool
    indices: tuple | None = None  # 1-based offending bracket pair
    coordinate: int | None = None  # 1-based coordinate with the wrong parity

    def __bool__(self):
        return self.ok


def bracket(g: LieAlgebra, x, y):
    """Bilinear extension of the bracket tensor."""
    m = g.dim
    x, y = vec(x), vec(y)
    if len(x) != m or len(y) != m:
        raise ValueError("dimension mismatch")
    out = [ZERO] * m
    for i, xi in enumerate(x):
        if not xi:
            continue
        fi = g.f[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            v = fi[j]
            s = xi * yj
            for l in range(m):
                if v[l]:
                    out[l] += s * v[l]
    return tuple(out)


def check_jacobi(g: LieAlgebra) -> JacobiVerdict:
    """Jacobi identity over all basis triples; first violation in lex order."""
    m = g.dim
    for i in range(m):
        for j in range(m):
            for k in range(m):
                r = [ZERO] * m
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    v = g.f[a][b]
                    for q, vq in enumerate(v):
                        if vq:
                            w = g.f[q][c]
                            for l in range(m):
                                if w[l]:
                                    r[l] += vq * w[l]
                if not vec_is_zero(r):
                    return JacobiVerdict(False, (i + 1, j + 1, k + 1), tuple(r))
    return JacobiVerdict(True)


def _basis(m: int, i: int):
    v = [ZERO] * m
    v[i] = Fraction(1)
    return tuple(v)


def _series(g: LieAlgebra, lower_central: bool) -> tuple[Subspace, ...]:
    m = g.dim
    terms = [full_subspace(m)]
    while True:
        cur = terms[-1]
        prods = []
        if lower_central:
            for i in range(m):
                for b in cur.vectors():
                    prods.append(bracket(g, _basis(m, i), b))
        else:
            vs = cur.vectors()
            # antisymmetry: pairs with a <= b contribute nothing new
            for ai in range(len(vs)):
                for bi in range(ai + 1, len(vs)):
                    prods.append(bracket(g, vs[ai], vs[bi]))
        nxt = span(prods, m)
        terms.append(nxt)
        if nxt.is_zero() or nxt == cur:
            break
    return tuple(terms)


def lie_derived_series(g: LieAlgebra) -> tuple[Subspace, ...]:
    """Iterated [S, S] to stabilization, starting at the full algebra."""
    return _series(g, lower_central=False)


def lower_central_series(g: LieAlgebra) -> tuple[Subspace, ...]:
    """Iterated [G, S] to stabilization, starting at the full algebra."""
    return _series(g, lower_central=True)


def is_solvable(g: LieAlgebra) -> bool:
    return lie_derived_series(g)[-1].is_zero()


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].is_zero()


@lru_cache(maxsize=256)
def killing_form(g: LieAlgebra) -> Matrix:
    """K[i][j] = trace(ad e_i ∘ ad e_j), computed from the sparse brackets."""
    m = g.dim
    K = [[ZERO] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            s = ZERO
            for k in range(m):
                v = g.f[i][k]
                for l in range(m):
                    if v[l] and g.f[j][l][k]:
                        s += v[l] * g.f[j][l][k]
            K[i][j] = s
            K[j][i] = s
    return Matrix.from_rows(K)


def killing_signature(g: LieAlgebra) -> KillingSignature:
    """Exact signature by symmetric congruence reduction (no eigenvalues).

    At each step: take a nonzero diagonal entry of the trailing block as
    pivot (swapping it up if needed); when the whole trailing diagonal
    vanishes, adding a row/column with a nonzero off-diagonal entry puts
    2·A[p][q] on the diagonal (characteristic 0).
    """
    K = killing_form(g)
    m = g.dim
    A = [list(r) for r in K.entries]

    def swap(p, q):
        A[p], A[q] = A[q], A[p]
        for row in A:
            row[p], row[q] = row[q], row[p]

    def add_into(p, q):
        for jj in range(m):
            A[p][jj] += A[q][jj]
        for ii in range(m):
            A[ii][p] += A[ii][q]

    for p in range(m):
        if A[p][p] == 0:
            pivot = next((q for q in range(p + 1, m) if A[q][q]), None)
            if pivot is not None:
                swap(p, pivot)
            else:
                off = next((q for q in range(p + 1, m) if A[p][q]), None)
                if off is None:
                    continue  # row p is zero in the trailing block
                add_into(p, off)  # diagonal becomes 2·A[p][off] != 0
        d = A[p][p]
        for r in range(p + 1, m):
            if A[r][p]:
                f = A[r][p] / d
                for jj in range(m):
                    A[r][jj] -= f * A[p][jj]
                for ii in range(m):
                    A[ii][r] -= f * A[ii][p]
    pos = sum(1 for p in range(m) if A[p][p] > 0)
    neg = sum(1 for p in range(m) if A[p][p] < 0)
    return KillingSignature(pos, neg, m - pos - neg)


def lie_radical(g: LieAlgebra) -> Subspace:
    """Radical as the Killing-orthogonal complement of [g, g] (characteristic 0)."""
    m = g.dim
    derived = span([g.f[i][j] for i in range(m) for j in range(i + 1, m)], m)
    if derived.is_zero():
        return full_subspace(m)
    K = killing_form(g)
    rows = []
    for d in derived.vectors():
        rows.append(tuple(sum((d[k] * K.entries[k][j] for k in range(m) if d[k]), ZERO) for j in range(m)))
    return kernel(Matrix.from_rows(rows))


def lie_center(g: LieAlgebra) -> Subspace:
    """{x : [x, e_j] = 0 for all j}."""
    m = g.dim
    if m == 0:
        return full_subspace(0)
    rows = []
    for j in range(m):
        for l in range(m):
            rows.append(tuple(g.f[i][j][l] for i in range(m)))
    return kernel(Matrix.from_rows(rows))


def check_grading(g: LieAlgebra, gr: Grading) -> GradingVerdict:
    """Every bracket must land in the parity-correct coordinate span."""
    if len(gr.signs) != g.dim:
        raise ValueError("grading length does not match algebra dimension")
    m = g.dim
    for i in range(m):
        for j in range(i + 1, m):
            parity = gr.signs[i] * gr.signs[j]
            v = g.f[i][j]
            for l in range(m):
                if v[l] and gr.signs[l] != parity:
                    return GradingVerdict(False, (i + 1, j + 1), l + 1)
    return GradingVerdict(True)


def lie_to_lts(g: LieAlgebra, gr: Grading) -> TripleSystem:
    """Triple system (x, y, z) = [[x, y], z] on the minus part of a grading."""
    verdict = check_grading(g, gr)
    if not verdict:
        raise InvalidGrading(
            f"bracket [e{verdict.indices[0]},e{verdict.indices[1]}] has a component of wrong parity"
        )
    minus = gr.minus_indices
    n = len(minus)
    entries = {}
    for a in range(n):
        for b in range(a + 1, n):
            inner = g.f[minus[a]][minus[b]]
            for k in range(n):
                double = bracket(g, inner, _basis(g.dim, minus[k]))
                coords = tuple(double[minus[l]] for l in range(n))
                # parity guarantees the plus-part of the double bracket vanishes
                if not vec_is_zero(coords):
                    entries[(a, b, k)] = coords
    return TripleSystem.from_entries(n, entries)
