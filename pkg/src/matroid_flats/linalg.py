"""Exact rational linear algebra over column collections.

Columns are tuples of Fraction.  An EchelonState holds a fully reduced
row-echelon basis of the span of the columns fed to it; extending a
state never mutates it, so one parent state can be shared by many
candidate columns.  Everything here is exact: independence decisions
are never allowed near floating point, which is why float inputs are
rejected unless converted explicitly.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .labels import check_label, members_of

Vector = tuple[Fraction, ...]

__all__ = [
    "EchelonState",
    "RationalMatrix",
    "Vector",
    "canonicalize_vector",
    "dot",
    "echelon_empty",
    "echelon_from",
    "extend",
    "hyperplane_normal",
    "in_span",
    "parse_rational",
    "rational_from_float",
]


def parse_rational(text: str) -> Fraction:
    """Exact value of an integer, decimal, or "p/q" literal."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def rational_from_float(value: float) -> Fraction:
    """Exact binary expansion of a float; the explicit opt-in for float input."""
    if math.isnan(value) or math.isinf(value):
        raise ValueError(f"cannot convert {value!r} to a rational")
    return Fraction(value)


def coerce_entry(value, allow_floats: bool = False) -> Fraction:
    """Turn an int, Fraction, or literal string into an exact Fraction.

    Floats are a correctness trap for independence decisions and are
    rejected unless allow_floats is set, in which case they convert via
    their exact binary expansion.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational entry: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        if allow_floats:
            return rational_from_float(value)
        raise ValueError(
            f"float entry {value!r} rejected; pass an exact string such as "
            f"'1/3' or '0.25', or enable float conversion explicitly"
        )
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"cannot use {type(value).__name__} as a rational entry")


def dot(a: Sequence, b: Sequence) -> Fraction:
    """Exact inner product."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable collection of exact columns in a fixed ambient dimension.

    Columns are the ground-set elements, in order; element k is column k
    (1-based, like everywhere else in this package).
    """

    dim: int
    columns: tuple[Vector, ...]

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"dimension must be non-negative, got {self.dim}")
        for j, col in enumerate(self.columns, start=1):
            if len(col) != self.dim:
                raise ValueError(f"column {j} has length {len(col)}, expected {self.dim}")

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence], dim: int | None = None,
                     allow_floats: bool = False) -> "RationalMatrix":
        cols = tuple(
            tuple(coerce_entry(v, allow_floats) for v in col) for col in columns
        )
        if dim is None:
            if not cols:
                raise ValueError("dimension required for a matrix with no columns")
            dim = len(cols[0])
        return cls(dim, cols)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], allow_floats: bool = False) -> "RationalMatrix":
        parsed = [[coerce_entry(v, allow_floats) for v in row] for row in rows]
        if not parsed:
            raise ValueError("matrix needs at least one row")
        width = len(parsed[0])
        for i, row in enumerate(parsed, start=1):
            if len(row) != width:
                raise ValueError(f"row {i} has {len(row)} entries, expected {width}")
        columns = tuple(tuple(row[j] for row in parsed) for j in range(width))
        return cls(len(parsed), columns)

    @property
    def num_columns(self) -> int:
        return len(self.columns)

    def column(self, index: int) -> Vector:
        """Column of element index (1-based)."""
        if not 1 <= index <= self.num_columns:
            raise ValueError(f"column index {index} outside 1..{self.num_columns}")
        return self.columns[index - 1]

    def columns_of(self, label: int) -> list[Vector]:
        check_label(label, self.num_columns)
        return [self.columns[i - 1] for i in members_of(label)]


@dataclass(frozen=True)
class EchelonState:
    """Reduced row-echelon basis of the span of contributed columns.

    rows are unit-pivot vectors with strictly increasing pivot positions
    and zeros in every other pivot coordinate; sources records the
    1-based element index of each column whose insertion grew the rank.
    """

    dim: int
    rows: tuple[Vector, ...] = ()
    pivots: tuple[int, ...] = ()
    sources: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis_label(self) -> int:
        """Label of the source columns that grew this state.

        Columns contributed without a source index are skipped.
        """
        label = 0
        for index in self.sources:
            if index > 0:
                label |= 1 << (index - 1)
        return label


def echelon_empty(dim: int) -> EchelonState:
    return EchelonState(dim)


def _residual(state: EchelonState, column: Sequence[Fraction]) -> list[Fraction]:
    if len(column) != state.dim:
        raise ValueError(f"column length {len(column)} does not match dimension {state.dim}")
    res = list(column)
    for row, p in zip(state.rows, state.pivots):
        f = res[p]
        if f:
            res = [a - f * b for a, b in zip(res, row)]
    return res


def in_span(state: EchelonState, column: Sequence[Fraction]) -> bool:
    """True iff the column reduces to zero against the state."""
    return not any(_residual(state, column))


def extend(state: EchelonState, column: Sequence[Fraction],
           source: int = 0) -> tuple[EchelonState, bool]:
    """Reduce a column into the state; returns (new_state, grew).

    The input state is untouched either way, so it stays valid as the
    shared parent for further candidate columns.
    """
    res = _residual(state, column)
    pivot = next((i for i, v in enumerate(res) if v), -1)
    if pivot < 0:
        return state, False
    lead = res[pivot]
    new_row = tuple(v / lead for v in res)
    rows: list[Vector] = []
    pivots: list[int] = []
    inserted = False
    for row, p in zip(state.rows, state.pivots):
        if not inserted and pivot < p:
            rows.append(new_row)
            pivots.append(pivot)
            inserted = True
        f = row[pivot]
        rows.append(tuple(a - f * b for a, b in zip(row, new_row)) if f else row)
        pivots.append(p)
    if not inserted:
        rows.append(new_row)
        pivots.append(pivot)
    grown = EchelonState(state.dim, tuple(rows), tuple(pivots),
                         state.sources + (source,))
    return grown, True


def echelon_from(matrix: RationalMatrix, label: int) -> EchelonState:
    """Echelon state of the columns selected by label (ascending index order)."""
    check_label(label, matrix.num_columns)
    state = echelon_empty(matrix.dim)
    for index in members_of(label):
        state, _ = extend(state, matrix.columns[index - 1], source=index)
    return state


def canonicalize_vector(vector: Iterable) -> tuple[int, ...]:
    """Scale to coprime integer entries with the first nonzero entry positive.

    Idempotent; raises on the zero vector.
    """
    fracs = [coerce_entry(v) for v in vector]
    denominator_lcm = 1
    for f in fracs:
        denominator_lcm = denominator_lcm * f.denominator // math.gcd(
            denominator_lcm, f.denominator)
    ints = [int(f * denominator_lcm) for f in fracs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        raise ValueError("cannot canonicalize the zero vector")
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def hyperplane_normal(matrix: RationalMatrix, basis: int, full_rank: int) -> tuple[int, ...]:
    """Canonical integer normal orthogonal to full_rank-1 independent columns.

    The basis must select exactly full_rank-1 independent columns and the
    ambient dimension must equal full_rank, so the orthogonal complement
    is one-dimensional.
    """
    if matrix.dim != full_rank:
        raise ValueError(
            f"ambient dimension {matrix.dim} must equal the full rank {full_rank}")
    if basis.bit_count() != full_rank - 1:
        raise ValueError(
            f"basis selects {basis.bit_count()} columns, expected {full_rank - 1}")
    state = echelon_from(matrix, basis)
    if state.rank != full_rank - 1:
        raise ValueError("basis columns are linearly dependent")
    pivot_set = set(state.pivots)
    free = next(c for c in range(matrix.dim) if c not in pivot_set)
    normal = [Fraction(0)] * matrix.dim
    normal[free] = Fraction(1)
    for row, p in zip(state.rows, state.pivots):
        normal[p] = -row[free]
    return canonicalize_vector(normal)
