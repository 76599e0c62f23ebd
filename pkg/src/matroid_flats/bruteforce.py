"""Exhaustive flat enumeration, the independent correctness reference.

Every flat is the closure of at least one independent set, so closing
each independent subset of the ground set and deduplicating yields the
complete flat collection.  This is exponential in the ground size and
exists purely to validate the pointer engine and to generate expected
values for tests.
"""

from __future__ import annotations

from itertools import combinations

from .engine import FlatRecord
from .labels import full_label, label_of, members_of
from .oracles import IndependenceOracle

__all__ = ["GROUND_SET_CAP", "GroundSetTooLargeError", "brute_flats", "brute_pointer"]

GROUND_SET_CAP = 20


class GroundSetTooLargeError(ValueError):
    """Ground set exceeds the brute-force size cap."""


def _minimum_basis_label(oracle: IndependenceOracle, members: int, rank: int) -> int:
    """Smallest label among the independent size-rank subsets of a flat."""
    indices = members_of(members)
    best = None
    for combo in combinations(indices, rank):
        label = label_of(combo, oracle.ground_size)
        if (best is None or label < best) and oracle.query(label):
            best = label if best is None else min(best, label)
    if best is None:
        raise ValueError("no independent subset of the required size")
    return best


def brute_flats(oracle: IndependenceOracle, *,
                cap: int = GROUND_SET_CAP) -> tuple[FlatRecord, ...]:
    """All flats of the matroid, found by closing every independent subset.

    Returns records sorted by (rank, pointer), including the rank-0 flat
    and the full-rank flat, with members and pointers filled in.
    """
    n = oracle.ground_size
    if n > cap:
        raise GroundSetTooLargeError(
            f"ground size {n} exceeds the brute-force cap {cap}")
    closures: dict[int, int] = {}
    for subset in range(full_label(n) + 1):
        if not oracle.query(subset):
            continue
        # subset is independent, so an element joins its closure exactly
        # when adding it breaks independence.
        members = subset
        for index in range(1, n + 1):
            bit = 1 << (index - 1)
            if not members & bit and not oracle.query(subset | bit):
                members |= bit
        closures.setdefault(members, subset.bit_count())
    records = [
        FlatRecord(rank=rank,
                   pointer=_minimum_basis_label(oracle, members, rank),
                   members=members)
        for members, rank in closures.items()
    ]
    records.sort(key=lambda rec: (rec.rank, rec.pointer))
    return tuple(records)


def brute_pointer(oracle: IndependenceOracle, flat_members: int) -> int:
    """Minimum-label basis of a flat, by enumerating all its bases.

    Raises ValueError when flat_members is not actually a flat.
    """
    if oracle.closure(flat_members) != flat_members:
        raise ValueError(f"{bin(flat_members)} is not a flat: not closed")
    rank = oracle.rank(flat_members)
    return _minimum_basis_label(oracle, flat_members, rank)
