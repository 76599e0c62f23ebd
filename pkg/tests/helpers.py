"""Deterministic random matroid builders shared across tests."""

from fractions import Fraction
from random import Random

from matroid_flats import (
    GraphicOracle,
    RationalMatrix,
    UniformOracle,
    VectorialOracle,
)


def k4_oracle():
    return GraphicOracle(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def moment_curve_matrix(dim, n, first=1):
    """Columns (1, t, t^2, ...) at distinct integers: general position."""
    cols = [[Fraction(t) ** p for p in range(dim)]
            for t in range(first, first + n)]
    return RationalMatrix.from_columns(cols)


def random_vectorial(rng: Random, max_n=8, max_dim=4):
    dim = rng.randint(2, max_dim)
    n = rng.randint(max(2, dim - 1), max_n)
    cols = []
    for _ in range(n):
        roll = rng.random()
        if cols and roll < 0.10:
            # scalar multiple of an earlier column: a parallel element
            base = rng.choice(cols)
            factor = rng.choice([-2, -1, 2, 3])
            cols.append([factor * v for v in base])
        elif roll < 0.16:
            cols.append([0] * dim)  # a loop
        else:
            cols.append([rng.randint(-3, 3) for _ in range(dim)])
    return VectorialOracle(RationalMatrix.from_columns(cols, dim=dim))


def random_graphic(rng: Random, max_edges=10):
    num_vertices = rng.randint(3, 6)
    num_edges = rng.randint(3, max_edges)
    edges = []
    for _ in range(num_edges):
        u = rng.randint(1, num_vertices)
        if rng.random() < 0.06:
            edges.append((u, u))  # self-loop edge = matroid loop
        else:
            v = rng.randint(1, num_vertices)
            edges.append((u, v))
    return GraphicOracle(num_vertices, edges)


def random_uniform(rng: Random, max_n=12):
    n = rng.randint(1, max_n)
    return UniformOracle(n, rng.randint(0, n))


def matroid_corpus(seed=20250810, uniform=40, graphic=35, vectorial=35):
    """Mixed deterministic corpus; ground sizes stay brute-forceable."""
    rng = Random(seed)
    oracles = []
    for _ in range(uniform):
        oracles.append(random_uniform(rng))
    for _ in range(graphic):
        oracles.append(random_graphic(rng))
    for _ in range(vectorial):
        oracles.append(random_vectorial(rng))
    return oracles


def record_triples(records):
    return tuple((r.rank, r.pointer, r.members) for r in records)
