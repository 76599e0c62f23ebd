"""Zonotope H-representation from segment generators.

A zonotope anchored at the origin is {sum(lambda_k * w_k) : lambda_k in
[0, 1]} over generator columns w_k.  Each facet is parallel to a flat of
rank d-1 of the column matroid, so enumerating those flats gives every
facet normal; the two offsets per normal direction m are the support
values sum(max(0, m . w_k)) taken over the original generators, loops
and parallel columns included.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .engine import ProgressHook, enumerate_pointers, simplify_columns
from .labels import full_label
from .linalg import RationalMatrix, coerce_entry, dot, echelon_from, hyperplane_normal
from .oracles import VectorialOracle

__all__ = ["HalfSpace", "HRepresentation", "RankDeficientError", "hrep", "membership"]


class RankDeficientError(ValueError):
    """Generators do not span the ambient space."""


@dataclass(frozen=True)
class HalfSpace:
    """One facet inequality: normal . x <= offset.

    Normals are coprime integer vectors; the two facets of one
    hyperplane direction carry opposite normals.
    """

    normal: tuple[int, ...]
    offset: Fraction

    def evaluate(self, point: Sequence) -> Fraction:
        return dot(self.normal, [coerce_entry(v) for v in point])

    def contains(self, point: Sequence) -> bool:
        return self.evaluate(point) <= self.offset


@dataclass(frozen=True)
class HRepresentation:
    """Intersection of half-spaces bounding a zonotope."""

    dim: int
    halfspaces: tuple[HalfSpace, ...]
    generators: RationalMatrix

    @property
    def num_hyperplanes(self) -> int:
        return len(self.halfspaces) // 2


def _support_offset(generators: RationalMatrix, normal: Sequence) -> Fraction:
    """Support value of the zonotope in the given direction.

    The vertex maximizing normal . x takes lambda_k = 1 exactly on the
    generators with positive dot product, so the support is the sum of
    the positive dots; zero dots contribute nothing either way.
    """
    total = Fraction(0)
    for column in generators.columns:
        value = dot(normal, column)
        if value > 0:
            total += value
    return total


def hrep(generators: RationalMatrix, *, centered: bool = False,
         progress: ProgressHook | None = None) -> HRepresentation:
    """H-representation of the zonotope spanned by the generator segments.

    The generators must span the ambient space.  By default the zonotope
    is anchored at the origin; centered shifts it by minus half the
    generator sum so it becomes symmetric around the origin.
    """
    d = generators.dim
    spanned = echelon_from(generators, full_label(generators.num_columns)).rank
    if spanned < d:
        raise RankDeficientError(
            f"generators span only rank {spanned} of the {d}-dimensional "
            f"ambient space; drop {d - spanned} ambient coordinate(s) or "
            f"add generators")

    simplification = simplify_columns(generators)
    simple = (generators if simplification.is_identity
              else simplification.restrict_matrix(generators))
    report = enumerate_pointers(
        VectorialOracle(simple), include_extremes=True, assume_simple=True,
        fast_path=True, progress=progress)
    hyperplane_pointers = report.pointers_of_rank(d - 1)

    shift = None
    if centered:
        half = Fraction(1, 2)
        shift = [half * sum(col[i] for col in generators.columns)
                 for i in range(d)]

    halfspaces = []
    for pointer in hyperplane_pointers:
        normal = hyperplane_normal(simple, pointer, d)
        for direction in (normal, tuple(-v for v in normal)):
            offset = _support_offset(generators, direction)
            if shift is not None:
                offset -= dot(direction, shift)
            halfspaces.append(HalfSpace(direction, offset))

    # Hyperplanes are distinct flats and normals are canonical, so
    # duplicates would indicate a bug rather than input to clean up.
    assert len({h.normal for h in halfspaces}) == len(halfspaces)
    halfspaces.sort(key=lambda h: h.normal)
    return HRepresentation(d, tuple(halfspaces), generators)


def membership(representation: HRepresentation, point: Sequence) -> bool:
    """True iff the point satisfies every inequality (exact arithmetic)."""
    if len(point) != representation.dim:
        raise ValueError(
            f"point dimension {len(point)} does not match {representation.dim}")
    exact = [coerce_entry(v) for v in point]
    return all(h.contains(exact) for h in representation.halfspaces)
