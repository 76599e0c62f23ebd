"""Subsets of an ordered ground set, encoded as integer bit labels.

Ground-set elements are numbered 1..N in input order and element i owns
bit i-1, so the numeric value of a subset's label is sum(2**(i-1)) over
its members.  Comparing labels as plain integers is exactly the total
order this package uses to pick representative bases, and Python
integers give unbounded width for free.

The element numbering is part of the public contract: representative
bases ("pointers") and every enumeration order are only meaningful
relative to the input order of the ground set.
"""

from __future__ import annotations

from collections.abc import Iterable

__all__ = [
    "check_label",
    "clear_leading",
    "expansions",
    "format_label",
    "format_members",
    "full_label",
    "label_of",
    "leading_digit",
    "members_of",
    "parse_label",
    "prefix_below",
]


def check_label(label: int, ground_size: int) -> None:
    """Raise ValueError unless label encodes a subset of elements 1..ground_size."""
    if label < 0:
        raise ValueError(f"label must be non-negative, got {label}")
    if label >> ground_size:
        raise ValueError(f"label {bin(label)} exceeds ground size {ground_size}")


def full_label(ground_size: int) -> int:
    """Label of the whole ground set."""
    return (1 << ground_size) - 1


def label_of(members: Iterable[int], ground_size: int) -> int:
    """Encode 1-based element indices as a label; input order is irrelevant.

    Raises ValueError on duplicate or out-of-range indices.
    """
    label = 0
    for index in members:
        if not 1 <= index <= ground_size:
            raise ValueError(f"element index {index} outside 1..{ground_size}")
        bit = 1 << (index - 1)
        if label & bit:
            raise ValueError(f"duplicate element index {index}")
        label |= bit
    return label


def members_of(label: int) -> list[int]:
    """Ascending 1-based element indices of a label."""
    if label < 0:
        raise ValueError(f"label must be non-negative, got {label}")
    members = []
    while label:
        low = label & -label
        members.append(low.bit_length())
        label ^= low
    return members


def leading_digit(label: int) -> int:
    """1-based position of the most significant set bit (the largest member)."""
    if label <= 0:
        raise ValueError("leading digit is undefined for the empty label")
    return label.bit_length()


def clear_leading(label: int) -> int:
    """Label with its most significant set bit dropped."""
    return label ^ (1 << (leading_digit(label) - 1))


def expansions(label: int, ground_size: int) -> list[int]:
    """Labels obtained by setting one bit above the leading digit.

    Returns ground_size - leading_digit(label) labels in ascending order;
    each has exactly one more member than the input.
    """
    check_label(label, ground_size)
    lead = leading_digit(label)
    return [label | (1 << position) for position in range(lead, ground_size)]


def prefix_below(label: int, position: int) -> int:
    """Restrict a label to members with index strictly below position."""
    if position < 1:
        raise ValueError(f"position must be at least 1, got {position}")
    return label & ((1 << (position - 1)) - 1)


def format_label(label: int, ground_size: int) -> str:
    """Binary text form, element 1 rightmost, zero-padded to the ground size."""
    check_label(label, ground_size)
    return "0b" + format(label, f"0{ground_size}b")


def format_members(label: int) -> str:
    """Index-list text form such as "[1,3,7]"."""
    return "[" + ",".join(str(i) for i in members_of(label)) + "]"


def parse_label(text: str, ground_size: int) -> int:
    """Parse the binary ("0b1000101") or index-list ("[1,3,7]") text form."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unterminated index list: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return 0
        try:
            indices = [int(token) for token in body.split(",")]
        except ValueError as exc:
            raise ValueError(f"bad index list: {text!r}") from exc
        return label_of(indices, ground_size)
    if s[:2] in ("0b", "0B"):
        s = s[2:]
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a subset label: {text!r}")
    value = int(s, 2)
    check_label(value, ground_size)
    return value
