import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroid_flats import (
    clear_leading,
    expansions,
    format_label,
    format_members,
    label_of,
    leading_digit,
    members_of,
    parse_label,
    prefix_below,
)

subsets = st.lists(st.integers(min_value=1, max_value=16), unique=True)


def test_label_of_known_values():
    assert label_of([1, 3, 7], 8) == 69  # 1000101 in binary
    assert label_of([], 8) == 0
    assert label_of([1, 2, 5, 8], 8) == 147  # 10010011 in binary


def test_label_of_order_irrelevant():
    assert label_of([7, 1, 3], 8) == label_of([1, 3, 7], 8)


def test_label_of_rejects_bad_indices():
    with pytest.raises(ValueError):
        label_of([0], 4)
    with pytest.raises(ValueError):
        label_of([5], 4)
    with pytest.raises(ValueError):
        label_of([2, 2], 4)


def test_leading_digit():
    assert leading_digit(69) == 7
    assert leading_digit(19) == 5  # 00010011
    assert leading_digit(1) == 1
    with pytest.raises(ValueError):
        leading_digit(0)


def test_clear_leading():
    assert clear_leading(0b10010011) == 0b00010011
    assert clear_leading(1) == 0
    assert clear_leading(0b1000101) == 0b0000101
    with pytest.raises(ValueError):
        clear_leading(0)


def test_expansions():
    assert expansions(0b00010011, 8) == [0b00110011, 0b01010011, 0b10010011]
    assert expansions(0b10000000, 8) == []
    assert expansions(0b001, 3) == [0b011, 0b101]


def test_prefix_below():
    assert prefix_below(0b0110, 1) == 0
    assert prefix_below(0b1010, 4) == 0b0010
    assert prefix_below(0b10010011, 5) == 0b00000011
    with pytest.raises(ValueError):
        prefix_below(0b1, 0)


def test_text_forms():
    assert format_label(69, 8) == "0b01000101"
    assert format_members(69) == "[1,3,7]"
    assert parse_label("0b1000101", 8) == 69
    assert parse_label("[1,3,7]", 8) == 69
    assert parse_label("[]", 8) == 0
    with pytest.raises(ValueError):
        parse_label("0b102", 8)
    with pytest.raises(ValueError):
        parse_label("0b100000000", 8)  # exceeds ground size


@given(subsets, subsets)
def test_order_embedding(a, b):
    # comparing labels as integers is comparing subsets in the total order
    la, lb = label_of(a, 16), label_of(b, 16)
    assert (la == lb) == (set(a) == set(b))
    if set(a) != set(b):
        # the larger label owns the largest element of the symmetric difference
        top = max(set(a) ^ set(b))
        assert (la < lb) == (top in set(b))


@given(subsets)
def test_members_round_trip(indices):
    label = label_of(indices, 16)
    assert members_of(label) == sorted(indices)
    assert parse_label(format_label(label, 16), 16) == label
    assert parse_label(format_members(label), 16) == label


@given(st.integers(min_value=1, max_value=2**16 - 1))
def test_expansion_properties(label):
    n = 16
    for child in expansions(label, n):
        assert clear_leading(child) == label
        assert child.bit_count() == label.bit_count() + 1
    assert expansions(label, n) == sorted(expansions(label, n))


@given(st.integers(min_value=0, max_value=2**16 - 1),
       st.integers(min_value=1, max_value=17))
def test_prefix_below_properties(label, k):
    prefix = prefix_below(label, k)
    assert prefix & label == prefix
    assert all(i < k for i in members_of(prefix))
