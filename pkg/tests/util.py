"""Shared helpers: deterministic random rationals, vectors, matrices."""

from fractions import Fraction

from lietriple.exactla import Matrix, determinant


def random_rational(rng, lo=-3, hi=3, dens=(1, 2)):
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def random_matrix(rng, rows, cols, lo=-3, hi=3, dens=(1, 2)):
    return Matrix.from_rows(
        [[random_rational(rng, lo, hi, dens) for _ in range(cols)] for _ in range(rows)], cols
    )


def random_invertible(rng, n, lo=-3, hi=3, dens=(1, 2)):
    while True:
        m = random_matrix(rng, n, n, lo, hi, dens)
        if determinant(m) != 0:
            return m
