"""Lie triple systems over the rationals.

A triple system is stored as its full structure tensor: ``c[i][j][k]`` is
the coordinate vector of the product (e_i, e_j, e_k).  The constructor
enforces the structural part of the axioms (alternation in the first two
slots, stored antisymmetrically); the cyclic and derivation identities are
checked by :func:`check_axioms`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .exactla import (
    Matrix,
    Subspace,
    ZERO,
    full_subspace,
    inverse,
    kernel,
    pivot_columns,
    span,
    subspace_contains,
    vec,
    vec_is_zero,
    zero_vec,
)


class InvalidLTS(ValueError):
    """The value does not satisfy the triple-system identities."""


class NotAnIdeal(ValueError):
    """A subspace argument was required to be an ideal but is not."""


@dataclass(frozen=True)
class TripleSystem:
    """Finite-dimensional Lie triple system given by its structure tensor."""

    dim: int
    c: tuple  # c[i][j][k] -> coordinate vector, all indices 0-based

    def __post_init__(self):
        n = self.dim
        if len(self.c) != n or any(
            len(ci) != n or any(len(cij) != n or any(len(v) != n for v in cij) for cij in ci)
            for ci in self.c
        ):
            raise ValueError("tensor shape does not match dimension")
        for i in range(n):
            for k in range(n):
                if not vec_is_zero(self.c[i][i][k]):
                    raise InvalidLTS(f"(e{i + 1},e{i + 1},e{k + 1}) must vanish")
            for j in range(i + 1, n):
                for k in range(n):
                    if self.c[i][j][k] != tuple(-x for x in self.c[j][i][k]):
                        raise InvalidLTS(
                            f"tensor not antisymmetric in the first two slots at ({i + 1},{j + 1},{k + 1})"
                        )

    @staticmethod
    def from_entries(dim: int, entries: dict) -> TripleSystem:
        """Build from a sparse map {(i, j, k): vector} with 0-based i < j.

        The antisymmetric completion c[j][i][k] = -c[i][j][k] is filled in.
        """
        c = [[[list(zero_vec(dim)) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), v in entries.items():
            if not (0 <= i < j < dim and 0 <= k < dim):
                raise ValueError(f"bad tensor index ({i},{j},{k})")
            v = vec(v)
            if len(v) != dim:
                raise ValueError("coordinate vector length mismatch")
            c[i][j][k] = list(v)
            c[j][i][k] = [-x for x in v]
        frozen = tuple(
            tuple(tuple(tuple(x for x in vecs) for vecs in cij) for cij in ci) for ci in c
        )
        return TripleSystem(dim, frozen)

    @staticmethod
    def abelian(dim: int) -> TripleSystem:
        return TripleSystem.from_entries(dim, {})

    def product_entry(self, i: int, j: int, k: int):
        """(e_i, e_j, e_k) as a coordinate vector, 0-based indices."""
        return self.c[i][j][k]


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of check_axioms: valid, or the first violation found.

    ``indices`` are 1-based; the scan order is alternation instances, then
    cyclic instances (i,j,k), then derivation instances (x,y,u,v,w), each
    lexicographic, so the reported witness is deterministic.
    """

    ok: bool
    kind: str | None = None
    indices: tuple | None = None
    residual: tuple | None = None

    def __bool__(self):
        return self.ok


def triple_product(t: TripleSystem, x, y, z):
    """Trilinear extension of the tensor: sum x_i y_j z_k (e_i,e_j,e_k)."""
    n = t.dim
    x, y, z = vec(x), vec(y), vec(z)
    if len(x) != n or len(y) != n or len(z) != n:
        raise ValueError("dimension mismatch")
    out = [ZERO] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        ci = t.c[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            cij = ci[j]
            s = xi * yj
            for k, zk in enumerate(z):
                if not zk:
                    continue
                v = cij[k]
                q = s * zk
                for l in range(n):
                    if v[l]:
                        out[l] += q * v[l]
    return tuple(out)


def _product_vbb(t: TripleSystem, v, j: int, k: int):
    """(v, e_j, e_k) for a coordinate vector v."""
    n = t.dim
    out = [ZERO] * n
    for i, vi in enumerate(v):
        if vi:
            w = t.c[i][j][k]
            for l in range(n):
                if w[l]:
                    out[l] += vi * w[l]
    return tuple(out)


def _int_tensor(t: TripleSystem):
    """Common denominator d and the integer tensor d·c as nested lists."""
    d = 1
    for ci in t.c:
        for cij in ci:
            for v in cij:
                for x in v:
                    if x:
                        d = lcm(d, x.denominator)
    A = [
        [[[int(x * d) if x else 0 for x in v] for v in cij] for cij in ci] for ci in t.c
    ]
    return d, A


def check_axioms(t: TripleSystem) -> AxiomVerdict:
    """Verify the defining identities exactly over all basis instances.

    Checks (x,x,y) = 0, the cyclic identity over all n^3 basis triples and
    the derivation identity over all n^5 basis 5-tuples.  Returns the
    lexicographically first violating instance if any.

    Instances with first index not below the second are scanned implicitly:
    the stored antisymmetry makes the (j,i,...) instance the negative of the
    (i,j,...) one and the (i,i,...) instance zero, so restricting the
    explicit loop to i < j checks the same set and still reports the
    lexicographically first violation.  Both identities are homogeneous in
    the tensor, so the scan runs on the denominator-cleared integer tensor.
    """
    n = t.dim
    for i in range(n):
        for k in range(n):
            v = t.c[i][i][k]
            if not vec_is_zero(v):
                return AxiomVerdict(False, "alternating", (i + 1, i + 1, k + 1), v)
    d, A = _int_tensor(t)
    rng = range(n)
    for i in rng:
        Ai = A[i]
        for j in range(i + 1, n):
            Aij = Ai[j]
            Aj = A[j]
            for k in rng:
                x, y, z = Aij[k], Aj[k][i], A[k][i][j]
                for l in rng:
                    if x[l] + y[l] + z[l]:
                        r = tuple(
                            Fraction(x[q] + y[q] + z[q], d) for q in rng
                        )
                        return AxiomVerdict(False, "cyclic", (i + 1, j + 1, k + 1), r)
    zero_slice = [[all(x == 0 for v in A[i][j] for x in v) for j in rng] for i in rng]
    dd = d * d
    for i in rng:
        for j in range(i + 1, n):
            if zero_slice[i][j]:
                continue
            Aij = A[i][j]
            for u in rng:
                Au = A[u]
                for v in rng:
                    Auv = Au[v]
                    cu, cv = Aij[u], Aij[v]
                    for w in rng:
                        cw, cuvw = Aij[w], Auv[w]
                        for l in rng:
                            s = 0
                            for k in rng:
                                s += (
                                    cuvw[k] * Aij[k][l]
                                    - cu[k] * A[k][v][w][l]
                                    - cv[k] * Au[k][w][l]
                                    - cw[k] * Auv[k][l]
                                )
                            if s:
                                residual = []
                                for q in rng:
                                    acc = 0
                                    for k in rng:
                                        acc += (
                                            cuvw[k] * Aij[k][q]
                                            - cu[k] * A[k][v][w][q]
                                            - cv[k] * Au[k][w][q]
                                            - cw[k] * Auv[k][q]
                                        )
                                    residual.append(Fraction(acc, dd))
                                return AxiomVerdict(
                                    False,
                                    "derivation",
                                    (i + 1, j + 1, u + 1, v + 1, w + 1),
                                    tuple(residual),
                                )
    return AxiomVerdict(True)


def is_ideal(t: TripleSystem, d: Subspace) -> bool:
    """(D, M, M) contained in D; the other slots follow from the identities."""
    if d.ambient_dim != t.dim:
        raise ValueError("ambient dimension mismatch")
    for v in d.vectors():
        for j in range(t.dim):
            for k in range(t.dim):
                if not subspace_contains(d, _product_vbb(t, v, j, k)):
                    return False
    return True


def is_subsystem(t: TripleSystem, d: Subspace) -> bool:
    """(D, D, D) contained in D."""
    if d.ambient_dim != t.dim:
        raise ValueError("ambient dimension mismatch")
    for x in d.vectors():
        for y in d.vectors():
            for z in d.vectors():
                if not subspace_contains(d, triple_product(t, x, y, z)):
                    return False
    return True


def derived_subspace(t: TripleSystem, om: Subspace) -> Subspace:
    """Span of (M, om, om): all (e_i, a, b) with a, b over the basis of om."""
    if om.ambient_dim != t.dim:
        raise ValueError("ambient dimension mismatch")
    products = []
    for i in range(t.dim):
        for a in om.vectors():
            for b in om.vectors():
                products.append(triple_product(t, _basis(t.dim, i), a, b))
    return span(products, t.dim)


def _basis(n: int, i: int):
    v = [ZERO] * n
    v[i] = Fraction(1)
    return tuple(v)


@dataclass(frozen=True)
class DerivedSeries:
    """Derived series of an ideal: om, (M,om,om), (M,·,·), ...

    ``terms`` ends at the first zero term, or at the first repeated term
    when the series stabilizes above zero.  ``depth`` is the number of
    derivation steps taken; ``solvable`` iff the last term is zero.
    """

    terms: tuple
    solvable: bool
    depth: int

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.terms)


def derived_series(t: TripleSystem, om: Subspace) -> DerivedSeries:
    if not is_ideal(t, om):
        raise NotAnIdeal("derived series requires an ideal")
    terms = [om]
    while True:
        nxt = derived_subspace(t, terms[-1])
        terms.append(nxt)
        # dimensions strictly decrease until stabilization, so this terminates
        if nxt.is_zero() or nxt == terms[-2]:
            break
    solvable = terms[-1].is_zero()
    return DerivedSeries(tuple(terms), solvable, len(terms) - 1)


def lts_center(t: TripleSystem) -> Subspace:
    """{z : (z, x, y) = 0 and (x, y, z) = 0 for all basis x, y}."""
    n = t.dim
    rows = []
    for j in range(n):
        for k in range(n):
            for l in range(n):
                rows.append(tuple(t.c[i][j][k][l] for i in range(n)))
    for i in range(n):
        for j in range(n):
            for l in range(n):
                rows.append(tuple(t.c[i][j][k][l] for k in range(n)))
    if not rows:
        return full_subspace(n)
    return kernel(Matrix.from_rows(rows))


def quotient(t: TripleSystem, om: Subspace) -> TripleSystem:
    """Quotient triple system by an ideal, on the non-pivot standard coordinates."""
    if not is_ideal(t, om):
        raise NotAnIdeal("quotient requires an ideal")
    n = t.dim
    pivots = pivot_columns(om.basis, om.dim)
    complement = [j for j in range(n) if j not in pivots]
    q = len(complement)

    def reduce_mod(v):
        residual = list(v)
        for i, p in enumerate(pivots):
            coeff = residual[p]
            if coeff:
                row = om.basis.entries[i]
                residual = [x - coeff * y for x, y in zip(residual, row)]
        return tuple(residual[j] for j in complement)

    entries = {}
    for a in range(q):
        for b in range(a + 1, q):
            for k in range(q):
                prod = t.c[complement[a]][complement[b]][complement[k]]
                red = reduce_mod(prod)
                if not vec_is_zero(red):
                    entries[(a, b, k)] = red
    return TripleSystem.from_entries(q, entries)


def direct_sum(a: TripleSystem, b: TripleSystem) -> TripleSystem:
    """Block tensor with all cross products zero."""
    n = a.dim + b.dim
    entries = {}
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            for k in range(a.dim):
                v = a.c[i][j][k]
                if not vec_is_zero(v):
                    entries[(i, j, k)] = tuple(v) + zero_vec(b.dim)
    o = a.dim
    for i in range(b.dim):
        for j in range(i + 1, b.dim):
            for k in range(b.dim):
                v = b.c[i][j][k]
                if not vec_is_zero(v):
                    entries[(o + i, o + j, o + k)] = zero_vec(a.dim) + tuple(v)
    return TripleSystem.from_entries(n, entries)


def transform(t: TripleSystem, T: Matrix) -> TripleSystem:
    """Basis change: rows of T are the new basis vectors in old coordinates."""
    n = t.dim
    if T.rows != n or T.cols != n:
        raise ValueError("transform matrix must be n x n")
    Tinv = inverse(T)  # raises SingularMatrix
    new_rows = T.entries
    entries = {}
    for a in range(n):
        for b in range(a + 1, n):
            for k in range(n):
                prod_old = triple_product(t, new_rows[a], new_rows[b], new_rows[k])
                # old coords v relate to new coords x by v = x·T
                prod_new = Tinv.vecmat(prod_old)
                if not vec_is_zero(prod_new):
                    entries[(a, b, k)] = prod_new
    return TripleSystem.from_entries(n, entries)
