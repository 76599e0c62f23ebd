"""Rank-by-rank generation of all flats of a matroid via pointer labels.

Every flat is represented by its pointer: the minimum-label basis of the
flat.  Clearing the leading bit of a rank-i pointer always yields a
rank-(i-1) pointer, so the full pointer set is generated bottom-up: the
rank-1 pointers are the singletons, and each next rank is obtained by
setting one bit above the leading digit of each pointer and keeping the
candidates that pass the acceptance test.  The total work is linear in
the number of flats produced, times a polynomial in the ground size.

The engine itself requires a simple matroid (no loops, no parallel
elements) and refuses anything else loudly.  enumerate_flats() is the
end-to-end pipeline that preprocesses arbitrary matroids, enumerates on
the simplified ground set, and maps the flats back.

For vectorial matroids there is a fast path that replaces every oracle
query with incremental row-echelon updates shared across the candidates
of one parent pointer; it issues no boolean queries at all.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass, replace

from .labels import (
    check_label,
    clear_leading,
    full_label,
    leading_digit,
    members_of,
    prefix_below,
)
from .linalg import (
    EchelonState,
    RationalMatrix,
    canonicalize_vector,
    echelon_empty,
    echelon_from,
    extend,
    in_span,
)
from .oracles import IndependenceOracle, RelabeledOracle, VectorialOracle

__all__ = [
    "EnumerationReport",
    "FlatRecord",
    "NotSimpleError",
    "SimplificationMap",
    "enumerate_flats",
    "enumerate_pointers",
    "expand_flats",
    "is_pointer",
    "simplify",
    "simplify_columns",
    "unsimplify",
]

ProgressHook = Callable[[int, int], None]


@dataclass(frozen=True)
class FlatRecord:
    """One flat: its rank, its pointer, and (once expanded) its full member set.

    The pointer is the minimum-label basis of the flat, so its popcount
    equals the rank.  members is None until closures are filled in.
    """

    rank: int
    pointer: int
    members: int | None = None


@dataclass(frozen=True)
class EnumerationReport:
    """Flats grouped by rank plus bookkeeping for one enumeration run."""

    ground_size: int
    matroid_rank: int
    flats: tuple[FlatRecord, ...]
    query_count: int = 0
    elapsed_seconds: float = 0.0

    @property
    def total(self) -> int:
        return len(self.flats)

    @property
    def counts_by_rank(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for record in self.flats:
            counts[record.rank] = counts.get(record.rank, 0) + 1
        return counts

    def profile(self) -> tuple[int, ...]:
        """Counts for ranks 0..matroid_rank, zero-filled."""
        counts = self.counts_by_rank
        return tuple(counts.get(r, 0) for r in range(self.matroid_rank + 1))

    def pointers_of_rank(self, rank: int) -> list[int]:
        return [rec.pointer for rec in self.flats if rec.rank == rank]

    def by_rank(self) -> dict[int, list[FlatRecord]]:
        grouped: dict[int, list[FlatRecord]] = {}
        for record in self.flats:
            grouped.setdefault(record.rank, []).append(record)
        return grouped


@dataclass(frozen=True)
class SimplificationMap:
    """Loops, parallel classes, and the representative renumbering of a matroid.

    classes are ordered by their representative (the smallest original
    index of each class); representative j of the simplified matroid is
    classes[j-1][0].
    """

    ground_size: int
    loops: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    @property
    def simple_size(self) -> int:
        return len(self.classes)

    @property
    def is_identity(self) -> bool:
        return not self.loops and all(len(c) == 1 for c in self.classes)

    def simplified_oracle(self, oracle: IndependenceOracle) -> RelabeledOracle:
        """Oracle over the representatives only, renumbered 1..simple_size."""
        return RelabeledOracle(oracle, self.representatives)

    def restrict_matrix(self, matrix: RationalMatrix) -> RationalMatrix:
        """Columns of the representatives, in order."""
        return RationalMatrix(
            matrix.dim, tuple(matrix.columns[i - 1] for i in self.representatives))

    def to_original_label(self, label: int) -> int:
        """Relabel a simplified-matroid label to original indices.

        Representative j maps back to its class minimum, so pointers keep
        their minimality under the original labeling.
        """
        check_label(label, self.simple_size)
        mapped = 0
        reps = self.representatives
        for j in members_of(label):
            mapped |= 1 << (reps[j - 1] - 1)
        return mapped

    def expand_members(self, label: int) -> int:
        """Original member set of a simplified flat: full classes plus all loops."""
        check_label(label, self.simple_size)
        mapped = 0
        for index in self.loops:
            mapped |= 1 << (index - 1)
        for j in members_of(label):
            for index in self.classes[j - 1]:
                mapped |= 1 << (index - 1)
        return mapped


class NotSimpleError(ValueError):
    """The engine was handed a matroid with loops or parallel elements."""

    def __init__(self, simplification: SimplificationMap):
        self.simplification = simplification
        parts = []
        if simplification.loops:
            parts.append(f"loops {list(simplification.loops)}")
        parallels = [list(c) for c in simplification.classes if len(c) > 1]
        if parallels:
            parts.append(f"parallel classes {parallels}")
        super().__init__(
            "matroid is not simple (" + "; ".join(parts) + "); "
            "preprocess with simplify() or use enumerate_flats()")


def simplify(oracle: IndependenceOracle) -> SimplificationMap:
    """Detect loops and parallel classes through oracle queries.

    Loops are dependent singletons; two non-loops are parallel when their
    pair is dependent.  Each class is led by its smallest index.
    """
    n = oracle.ground_size
    loops = []
    classes: list[list[int]] = []
    for index in range(1, n + 1):
        bit = 1 << (index - 1)
        if not oracle.query(bit):
            loops.append(index)
            continue
        for cls in classes:
            if not oracle.query((1 << (cls[0] - 1)) | bit):
                cls.append(index)
                break
        else:
            classes.append([index])
    return SimplificationMap(n, tuple(loops), tuple(tuple(c) for c in classes))


def simplify_columns(matrix: RationalMatrix) -> SimplificationMap:
    """Vectorial simplify without queries: zero columns are loops and
    columns sharing a canonical direction are parallel."""
    loops = []
    by_direction: dict[tuple[int, ...], list[int]] = {}
    for index, col in enumerate(matrix.columns, start=1):
        if not any(col):
            loops.append(index)
            continue
        by_direction.setdefault(canonicalize_vector(col), []).append(index)
    classes = sorted(by_direction.values(), key=lambda cls: cls[0])
    return SimplificationMap(
        matrix.num_columns, tuple(loops), tuple(tuple(c) for c in classes))


class _GenericChecker:
    """Candidate acceptance for one parent pointer, via oracle queries.

    A candidate (parent plus one bit delta above its leading digit) is a
    pointer iff it is independent and no smaller-index element k < delta
    outside it lies in its closure without already lying in the closure
    of the candidate's prefix below k.  The prefix clause depends only on
    the parent, so its outcome is memoized per position.
    """

    __slots__ = ("oracle", "parent", "_prefix_dependent")

    def __init__(self, oracle: IndependenceOracle, parent: int):
        self.oracle = oracle
        self.parent = parent
        self._prefix_dependent: dict[int, bool] = {}

    def accepts(self, delta: int) -> bool:
        oracle = self.oracle
        candidate = self.parent | (1 << (delta - 1))
        if not oracle.query(candidate):
            return False
        for k in range(1, delta):
            bit = 1 << (k - 1)
            if candidate & bit:
                continue
            # One query usually settles it: if the candidate stays
            # independent with element k added, k is outside its span.
            if oracle.query(candidate | bit):
                continue
            if not self._covered_by_prefix(k):
                return False
        return True

    def _covered_by_prefix(self, k: int) -> bool:
        covered = self._prefix_dependent.get(k)
        if covered is None:
            prefix = prefix_below(self.parent, k)
            covered = not self.oracle.query(prefix | (1 << (k - 1)))
            self._prefix_dependent[k] = covered
        return covered


class _VectorialChecker:
    """Echelon-based candidate acceptance for one parent pointer.

    The parent's echelon state is built once and shared by all its
    candidates; the prefix clause is resolved for every position in one
    ascending sweep, also shared.  No oracle queries are issued.
    """

    __slots__ = ("matrix", "parent", "parent_state", "ok", "must_check")

    def __init__(self, matrix: RationalMatrix, parent: int,
                 parent_state: EchelonState | None = None):
        self.matrix = matrix
        self.parent = parent
        if parent_state is None:
            parent_state = echelon_from(matrix, parent)
        self.parent_state = parent_state
        self.ok = parent_state.rank == parent.bit_count()
        # Positions k outside the parent whose column escapes the span of
        # the members below k; only these can disqualify a candidate.
        # Candidates only look left of their new bit, so the last
        # position never matters.
        must_check: list[int] = []
        if self.ok:
            prefix = echelon_empty(matrix.dim)
            for k in range(1, matrix.num_columns):
                column = matrix.columns[k - 1]
                if parent & (1 << (k - 1)):
                    prefix, _ = extend(prefix, column, source=k)
                elif not in_span(prefix, column):
                    must_check.append(k)
        self.must_check = must_check

    def accepts(self, delta: int) -> bool:
        if not self.ok:
            return False
        candidate_state, grew = extend(
            self.parent_state, self.matrix.columns[delta - 1], source=delta)
        if not grew:
            return False
        for k in self.must_check:
            if k >= delta:
                break
            if in_span(candidate_state, self.matrix.columns[k - 1]):
                return False
        return True


def is_pointer(oracle: IndependenceOracle, label: int,
               parent_state: EchelonState | None = None) -> bool:
    """True iff label is the minimum-label basis of the flat it spans.

    Assumes a simple matroid.  For vectorial oracles the check runs on
    echelon states (parent_state, when given, is reused as the state of
    the label minus its leading element); otherwise it runs on boolean
    queries.
    """
    if label <= 0:
        raise ValueError("the pointer test needs a nonempty label")
    check_label(label, oracle.ground_size)
    delta = leading_digit(label)
    parent = clear_leading(label)
    if isinstance(oracle, VectorialOracle):
        return _VectorialChecker(oracle.matrix, parent, parent_state).accepts(delta)
    return _GenericChecker(oracle, parent).accepts(delta)


def _resolve_fast_path(oracle: IndependenceOracle, fast_path: bool | None) -> bool:
    if fast_path is None:
        return isinstance(oracle, VectorialOracle)
    if fast_path and not isinstance(oracle, VectorialOracle):
        raise ValueError("the echelon fast path needs a VectorialOracle")
    return fast_path


def enumerate_pointers(oracle: IndependenceOracle, *,
                       include_extremes: bool = True,
                       assume_simple: bool = False,
                       fast_path: bool | None = None,
                       progress: ProgressHook | None = None) -> EnumerationReport:
    """Generate the pointers of every flat of a simple matroid.

    Rank-1 pointers are the singletons; each higher rank up to
    matroid_rank - 1 comes from expanding the previous rank's pointers
    and filtering.  include_extremes adds the rank-0 flat and the full
    ground set.  Matroids of rank <= 1 yield only the extremes.

    Unless assume_simple is set, loops and parallel elements are
    detected first and raise NotSimpleError.
    """
    n = oracle.ground_size
    fast = _resolve_fast_path(oracle, fast_path)
    matrix = oracle.matrix if fast else None
    started = time.perf_counter()
    queries_before = oracle.query_count

    if not assume_simple:
        simplification = simplify_columns(matrix) if fast else simplify(oracle)
        if not simplification.is_identity:
            raise NotSimpleError(simplification)

    if fast:
        full_state = echelon_from(matrix, full_label(n))
        d = full_state.rank
        top_pointer = full_state.basis_label()
    else:
        d = oracle.matroid_rank()
        top_pointer = None

    levels: dict[int, list[int]] = {}
    if d >= 2:
        levels[1] = [1 << i for i in range(n)]
        if progress is not None:
            progress(1, n)
        frontier = levels[1]
        for rank in range(2, d):
            produced: list[int] = []
            for parent in frontier:
                lead = leading_digit(parent)
                if lead >= n:
                    continue
                checker = (_VectorialChecker(matrix, parent) if fast
                           else _GenericChecker(oracle, parent))
                for delta in range(lead + 1, n + 1):
                    if checker.accepts(delta):
                        produced.append(parent | (1 << (delta - 1)))
            produced.sort()
            levels[rank] = produced
            frontier = produced
            if progress is not None:
                progress(rank, len(produced))

    if include_extremes:
        levels[0] = [0]
        if d >= 1:
            if top_pointer is None:
                top_pointer = oracle.greedy_basis(full_label(n))
            levels[d] = [top_pointer]

    flats = tuple(FlatRecord(rank=rank, pointer=pointer)
                  for rank in sorted(levels) for pointer in levels[rank])
    return EnumerationReport(
        ground_size=n,
        matroid_rank=d,
        flats=flats,
        query_count=oracle.query_count - queries_before,
        elapsed_seconds=time.perf_counter() - started,
    )


def expand_flats(oracle: IndependenceOracle, report: EnumerationReport,
                 fast_path: bool | None = None) -> EnumerationReport:
    """Fill in each flat's full member set as the closure of its pointer."""
    fast = _resolve_fast_path(oracle, fast_path)
    started = time.perf_counter()
    queries_before = oracle.query_count
    n = report.ground_size
    matrix = oracle.matrix if fast else None
    expanded = []
    for record in report.flats:
        if record.rank == report.matroid_rank:
            members = full_label(n)
        elif fast:
            state = echelon_from(matrix, record.pointer)
            members = record.pointer
            for index in range(1, n + 1):
                bit = 1 << (index - 1)
                if not members & bit and in_span(state, matrix.columns[index - 1]):
                    members |= bit
        else:
            members = oracle.closure(record.pointer)
        expanded.append(replace(record, members=members))
    return replace(
        report,
        flats=tuple(expanded),
        query_count=report.query_count + oracle.query_count - queries_before,
        elapsed_seconds=report.elapsed_seconds + time.perf_counter() - started,
    )


def unsimplify(report: EnumerationReport,
               simplification: SimplificationMap) -> EnumerationReport:
    """Map flats of the simplified matroid back to the original ground set.

    Members become the union of the parallel classes of their
    representatives plus all loops; pointers relabel representative
    indices to the class minima; ranks are unchanged.
    """
    if report.ground_size != simplification.simple_size:
        raise ValueError(
            f"report ground size {report.ground_size} does not match the "
            f"simplification's {simplification.simple_size} classes")
    mapped = [
        FlatRecord(
            rank=record.rank,
            pointer=simplification.to_original_label(record.pointer),
            members=(None if record.members is None
                     else simplification.expand_members(record.members)),
        )
        for record in report.flats
    ]
    mapped.sort(key=lambda rec: (rec.rank, rec.pointer))
    return replace(report, ground_size=simplification.ground_size,
                   flats=tuple(mapped))


def enumerate_flats(oracle: IndependenceOracle, *,
                    include_extremes: bool = True,
                    expand: bool = True,
                    fast_path: bool | None = None,
                    progress: ProgressHook | None = None) -> EnumerationReport:
    """End-to-end pipeline: simplify, enumerate, expand closures, map back.

    Works for any matroid; loops and parallel elements are factored out
    before enumeration and restored in the returned flats.  This is what
    the CLI calls.
    """
    fast = _resolve_fast_path(oracle, fast_path)
    started = time.perf_counter()
    queries_before = oracle.query_count

    if fast:
        simplification = simplify_columns(oracle.matrix)
        inner: IndependenceOracle = (
            oracle if simplification.is_identity
            else VectorialOracle(simplification.restrict_matrix(oracle.matrix)))
    else:
        simplification = simplify(oracle)
        inner = (oracle if simplification.is_identity
                 else simplification.simplified_oracle(oracle))

    report = enumerate_pointers(
        inner, include_extremes=include_extremes, assume_simple=True,
        fast_path=fast, progress=progress)
    if expand:
        report = expand_flats(inner, report, fast_path=fast)
    if not simplification.is_identity:
        report = unsimplify(report, simplification)
    return replace(
        report,
        query_count=oracle.query_count - queries_before,
        elapsed_seconds=time.perf_counter() - started,
    )
