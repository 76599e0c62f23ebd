"""Independence oracles: the decision interface plus stock implementations.

The boolean query is the only primitive an oracle must provide; rank,
closure, and the matroid rank are derived from it generically, so a
user-supplied oracle gets them for free.  Every query is tallied exactly
in query_count, which is what the output-sensitivity experiments read.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Sequence

from .labels import check_label, full_label, members_of
from .linalg import RationalMatrix, echelon_empty, extend

__all__ = [
    "GraphicOracle",
    "IndependenceOracle",
    "RelabeledOracle",
    "UniformOracle",
    "VectorialOracle",
]


class IndependenceOracle(ABC):
    """Decision procedure: is a subset of the ground set independent?

    Oracles are read-only after construction apart from the query tally,
    so they can be shared freely between concurrent readers.
    """

    def __init__(self, ground_size: int):
        if ground_size < 0:
            raise ValueError(f"ground size must be non-negative, got {ground_size}")
        self.ground_size = ground_size
        self.query_count = 0
        self._cached_matroid_rank: int | None = None

    @abstractmethod
    def _independent(self, label: int) -> bool:
        """Decide independence of a validated label."""

    def query(self, label: int) -> bool:
        """True iff the subset is independent.  Counts one query."""
        check_label(label, self.ground_size)
        self.query_count += 1
        return self._independent(label)

    def reset_query_count(self) -> None:
        self.query_count = 0

    def greedy_basis(self, label: int) -> int:
        """Minimum-label basis of the subset.

        Greedy over ascending element indices; the exchange property makes
        any order correct, and the fixed order keeps runs reproducible and
        the result minimal in the label order.
        """
        check_label(label, self.ground_size)
        basis = 0
        rest = label
        while rest:
            low = rest & -rest
            rest ^= low
            if self.query(basis | low):
                basis |= low
        return basis

    def rank(self, label: int) -> int:
        """Size of a maximal independent subset of the given subset."""
        return self.greedy_basis(label).bit_count()

    def matroid_rank(self) -> int:
        """Rank of the whole ground set (cached after the first call)."""
        if self._cached_matroid_rank is None:
            self._cached_matroid_rank = self.rank(full_label(self.ground_size))
        return self._cached_matroid_rank

    def closure(self, label: int) -> int:
        """All elements whose addition leaves the rank of the subset unchanged."""
        basis = self.greedy_basis(label)
        closed = label
        for index in range(1, self.ground_size + 1):
            bit = 1 << (index - 1)
            if closed & bit:
                continue
            if not self.query(basis | bit):
                closed |= bit
        return closed


class UniformOracle(IndependenceOracle):
    """Uniform matroid: independent iff the subset has at most rank_cap elements."""

    def __init__(self, ground_size: int, rank_cap: int):
        super().__init__(ground_size)
        if rank_cap < 0:
            raise ValueError(f"rank cap must be non-negative, got {rank_cap}")
        self.rank_cap = rank_cap

    def _independent(self, label: int) -> bool:
        return label.bit_count() <= self.rank_cap


class GraphicOracle(IndependenceOracle):
    """Cycle matroid of a graph: an edge subset is independent iff it is a forest.

    Acyclicity is decided with a fresh union-find per query, so the cost
    is near-linear in the subset size.  Self-loop edges (u, u) behave as
    matroid loops, and repeated edges as parallel elements.
    """

    def __init__(self, num_vertices: int, edges: Sequence[tuple[int, int]]):
        super().__init__(len(edges))
        if num_vertices < 0:
            raise ValueError(f"vertex count must be non-negative, got {num_vertices}")
        self.num_vertices = num_vertices
        parsed = []
        for i, (u, v) in enumerate(edges, start=1):
            if not (1 <= u <= num_vertices and 1 <= v <= num_vertices):
                raise ValueError(f"edge {i} endpoint outside 1..{num_vertices}: ({u}, {v})")
            parsed.append((int(u), int(v)))
        self.edges = tuple(parsed)

    def _independent(self, label: int) -> bool:
        parent = list(range(self.num_vertices + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for index in members_of(label):
            u, v = self.edges[index - 1]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


class VectorialOracle(IndependenceOracle):
    """Column matroid: independent iff the columns are linearly independent.

    Decisions run over exact rationals.  The matrix is also what the
    engine's echelon fast path operates on directly, without boolean
    queries.
    """

    def __init__(self, matrix: RationalMatrix):
        super().__init__(matrix.num_columns)
        self.matrix = matrix

    def _independent(self, label: int) -> bool:
        state = echelon_empty(self.matrix.dim)
        for index in members_of(label):
            state, grew = extend(state, self.matrix.columns[index - 1], source=index)
            if not grew:
                return False
        return True


class RelabeledOracle(IndependenceOracle):
    """View of a base oracle on a sub-ground-set renumbered 1..K.

    element_map[j-1] is the original index of new element j and must be
    strictly increasing so the label order is preserved.  Queries forward
    to the base oracle and are therefore tallied there as well.
    """

    def __init__(self, base: IndependenceOracle, element_map: Sequence[int]):
        super().__init__(len(element_map))
        previous = 0
        for index in element_map:
            if not previous < index <= base.ground_size:
                raise ValueError(
                    f"element map must be strictly increasing within "
                    f"1..{base.ground_size}, got {list(element_map)}")
            previous = index
        self.base = base
        self.element_map = tuple(element_map)

    def _independent(self, label: int) -> bool:
        mapped = 0
        for j in members_of(label):
            mapped |= 1 << (self.element_map[j - 1] - 1)
        return self.base.query(mapped)
