from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (
    matroid_corpus,
    random_vectorial,
    record_triples,
)
from matroid_flats import (
    NotSimpleError,
    RationalMatrix,
    UniformOracle,
    VectorialOracle,
    brute_flats,
    brute_pointer,
    clear_leading,
    enumerate_flats,
    enumerate_pointers,
    expand_flats,
    is_pointer,
    simplify,
    simplify_columns,
    unsimplify,
)

E3 = VectorialOracle(RationalMatrix.from_columns([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
FOUR = RationalMatrix.from_columns([[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]])


def test_simplify_examples():
    parallel = VectorialOracle(RationalMatrix.from_columns([[1, 0], [2, 0], [0, 1]]))
    smap = simplify(parallel)
    assert smap.loops == ()
    assert smap.classes == ((1, 2), (3,))
    assert smap.representatives == (1, 3)
    assert not smap.is_identity

    assert simplify(E3).is_identity

    loopy = VectorialOracle(RationalMatrix.from_columns([[0, 0], [1, 0]]))
    smap2 = simplify(loopy)
    assert smap2.loops == (1,)
    assert smap2.representatives == (2,)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2**31))
def test_simplify_columns_matches_generic(seed):
    oracle = random_vectorial(Random(seed))
    assert simplify_columns(oracle.matrix) == simplify(oracle)


def test_is_pointer_examples():
    oracle = VectorialOracle(FOUR)
    assert is_pointer(oracle, 0b0011)
    assert not is_pointer(oracle, 0b0110)  # column 1 spans with 2,3 but not alone
    assert not is_pointer(oracle, 0b0101)
    dependent = VectorialOracle(RationalMatrix.from_columns([[1, 0], [0, 1], [1, 1]]))
    assert not is_pointer(dependent, 0b111)  # dependent set is never a pointer
    with pytest.raises(ValueError):
        is_pointer(oracle, 0)


def test_is_pointer_matches_brute_force():
    for oracle in [VectorialOracle(FOUR), E3]:
        flats = brute_flats(oracle)
        pointers = {rec.pointer for rec in flats if rec.rank >= 1}
        n = oracle.ground_size
        for label in range(1, 1 << n):
            assert is_pointer(oracle, label) == (label in pointers)


def test_enumerate_pointers_examples():
    rep = enumerate_pointers(E3)
    assert rep.pointers_of_rank(2) == [0b011, 0b101, 0b110]
    assert rep.profile() == (1, 3, 3, 1)

    rep4 = enumerate_pointers(UniformOracle(4, 3))
    assert rep4.counts_by_rank[1] == 4
    assert rep4.counts_by_rank[2] == 6

    repf = enumerate_pointers(VectorialOracle(FOUR))
    assert repf.pointers_of_rank(2) == [0b0011, 0b1001, 0b1010, 0b1100]


def test_enumerate_refuses_non_simple():
    parallel = VectorialOracle(RationalMatrix.from_columns([[1, 0], [2, 0], [0, 1]]))
    with pytest.raises(NotSimpleError, match="parallel"):
        enumerate_pointers(parallel)
    loopy = UniformOracle(3, 0)
    with pytest.raises(NotSimpleError, match="loop"):
        enumerate_pointers(loopy)
    with pytest.raises(ValueError):
        enumerate_pointers(UniformOracle(3, 2), fast_path=True)


def test_expand_flats():
    oracle = VectorialOracle(FOUR)
    report = expand_flats(oracle, enumerate_pointers(oracle))
    by_pointer = {rec.pointer: rec.members for rec in report.flats}
    assert by_pointer[0b0011] == 0b0111
    assert by_pointer[0b0001] == 0b0001  # closed singleton in a simple matroid
    assert by_pointer[0b1011] == 0b1111  # full-rank flat is the whole ground set
    assert by_pointer[0] == 0


def test_unsimplify_examples():
    parallel = VectorialOracle(RationalMatrix.from_columns([[1, 0], [2, 0], [0, 1]]))
    smap = simplify(parallel)
    inner = VectorialOracle(smap.restrict_matrix(parallel.matrix))
    report = expand_flats(inner, enumerate_pointers(inner))
    mapped = unsimplify(report, smap)
    assert mapped.ground_size == 3
    triples = record_triples(mapped.flats)
    assert (1, 0b001, 0b011) in triples  # the parallel-class flat {1,2}
    assert (0, 0, 0) in triples

    identity = simplify(E3)
    rep = expand_flats(E3, enumerate_pointers(E3))
    assert unsimplify(rep, identity).flats == rep.flats


def test_unsimplify_collects_loops_into_rank_zero():
    loopy = VectorialOracle(RationalMatrix.from_columns([[0, 0], [1, 0], [0, 1]]))
    report = enumerate_flats(loopy)
    assert record_triples(report.flats)[0] == (0, 0, 0b001)


def test_degenerate_ranks():
    # rank 1: only the extremes exist
    single = VectorialOracle(RationalMatrix.from_columns([[2]]))
    rep = enumerate_flats(single)
    assert record_triples(rep.flats) == ((0, 0, 0), (1, 1, 1))
    assert enumerate_flats(single, expand=False).total == 2
    # rank 0: every element is a loop, the only flat is the ground set
    zero = UniformOracle(3, 0)
    rep0 = enumerate_flats(zero)
    assert record_triples(rep0.flats) == ((0, 0, 0b111),)
    # all elements parallel: rank 1
    u1 = UniformOracle(4, 1)
    rep1 = enumerate_flats(u1)
    assert record_triples(rep1.flats) == ((0, 0, 0), (1, 1, 0b1111))


def test_include_extremes_flag():
    rep = enumerate_pointers(E3, include_extremes=False)
    assert sorted(rep.counts_by_rank) == [1, 2]
    rep2 = enumerate_pointers(E3, include_extremes=True)
    assert sorted(rep2.counts_by_rank) == [0, 1, 2, 3]


def test_determinism():
    oracle = VectorialOracle(FOUR)
    first = enumerate_flats(oracle)
    second = enumerate_flats(oracle)
    assert first.flats == second.flats
    assert first.query_count == second.query_count


def test_fast_path_issues_no_queries():
    oracle = VectorialOracle(FOUR)
    oracle.reset_query_count()
    report = enumerate_flats(oracle, fast_path=True)
    assert oracle.query_count == 0
    assert report.query_count == 0
    generic = enumerate_flats(oracle, fast_path=False)
    assert generic.query_count > 0
    assert report.flats == generic.flats


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=2**31))
def test_fast_path_matches_generic_path(seed):
    oracle = random_vectorial(Random(seed))
    fast = enumerate_flats(oracle, fast_path=True)
    generic = enumerate_flats(oracle, fast_path=False)
    assert fast.flats == generic.flats


def test_pointer_minimality_against_brute_force():
    rng = Random(99)
    for _ in range(6):
        oracle = random_vectorial(rng, max_n=6, max_dim=3)
        report = enumerate_flats(oracle)
        for record in report.flats:
            assert record.pointer == brute_pointer(oracle, record.members)
            assert record.pointer.bit_count() == record.rank
            assert record.pointer & record.members == record.pointer


def test_leading_bit_removal_gives_previous_rank_pointer():
    for oracle in matroid_corpus(seed=5, uniform=4, graphic=4, vectorial=4):
        report = enumerate_flats(oracle, expand=False)
        pointers = {rec.rank: set(report.pointers_of_rank(rec.rank))
                    for rec in report.flats}
        for record in report.flats:
            if record.rank >= 1 and record.rank - 1 in pointers:
                assert clear_leading(record.pointer) in pointers[record.rank - 1]


def test_progress_hook_reports_each_rank():
    seen = []
    enumerate_flats(E3, progress=lambda rank, count: seen.append((rank, count)))
    assert seen == [(1, 3), (2, 3)]


def test_general_position_gives_binomial_counts():
    from math import comb

    from helpers import moment_curve_matrix

    # rank below half the ground size, generators in general position
    n, dim = 10, 3
    report = enumerate_flats(VectorialOracle(moment_curve_matrix(dim, n)))
    for k in range(dim):
        assert report.counts_by_rank[k] == comb(n, k)
    assert report.counts_by_rank[dim] == 1
