import random
from itertools import chain, combinations
from math import factorial

import pytest

from cellscope.cells import (
    CellPartition,
    approx_cells,
    cross_validated_cells,
    is_union_of_left_cells,
    local_union_check,
    partitions_agree,
    q_fiber,
    recording_rows,
    rs_cells,
    rs_insert,
)
from cellscope.classify import translated_ideal
from cellscope.parabolic import (
    double_coset_reps,
    in_DJ,
    longest_element,
    min_left_coset_reps,
    parabolic_members,
)
from cellscope.perms import (
    enumerate_group,
    identity,
    inverse,
    multiply,
    principal_weak_ideal,
)
from cellscope.tableaux import SkewShape, enumerate_std

E3 = (1, 2, 3)
S1 = (2, 1, 3)
S2 = (1, 3, 2)
S1S2 = (2, 3, 1)
S2S1 = (3, 1, 2)
W0 = (3, 2, 1)


def all_gensets(n):
    gens = range(1, n)
    return [frozenset(c) for c in chain.from_iterable(combinations(gens, r) for r in range(n))]


def test_approx_cells_rank2():
    cp = approx_cells(2)
    assert set(cp.cells) == {frozenset({(1, 2)}), frozenset({(2, 1)})}


def test_approx_cells_rank3_published_partition():
    cp = approx_cells(3)
    assert set(cp.cells) == {
        frozenset({E3}),
        frozenset({S2, S1S2}),
        frozenset({S1, S2S1}),
        frozenset({W0}),
    }


def test_approx_cells_rank4():
    cp = approx_cells(4)
    assert len(cp.cells) == 10
    assert sum(len(c) for c in cp.cells) == 24
    assert partitions_agree(cp, rs_cells(4))


def test_rs_insert_examples():
    pair = rs_insert(E3)
    assert pair.p.rows() == ((1, 2, 3),)
    assert pair.q.rows() == ((1, 2, 3),)
    pair = rs_insert((2, 3, 1))
    assert pair.p.rows() == ((1, 3), (2,))
    assert pair.q.rows() == ((1, 2), (3,))
    pair = rs_insert(S2)
    assert pair.p.rows() == ((1, 2), (3,))
    assert pair.q.rows() == ((1, 2), (3,))


def test_rs_insert_injective():
    for n in range(1, 7):
        pairs = {(rs_insert(w).p, rs_insert(w).q) for w in enumerate_group(n)}
        assert len(pairs) == factorial(n)


def test_rs_insert_shapes_agree():
    for w in enumerate_group(4):
        pair = rs_insert(w)
        assert pair.p.shape == pair.q.shape
        assert pair.p.shape.mu == ()


def test_rs_cells_counts():
    assert len(rs_cells(2).cells) == 2
    assert partitions_agree(rs_cells(3), approx_cells(3))
    # one cell per standard tableau with 5 boxes, counted independently
    # by backtracking enumeration over the straight shapes
    partitions_of_5 = [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]
    expected = sum(len(enumerate_std(SkewShape(lam))) for lam in partitions_of_5)
    assert len(rs_cells(5).cells) == expected == 26


def test_cell_lookup():
    cp = approx_cells(4)
    for w in enumerate_group(4):
        assert w in cp.cell_containing(w)
    with pytest.raises(ValueError):
        cp.cell_id((1, 2, 3))


def test_fiber_sizes_count_insertion_tableaux():
    # each fiber has one member per insertion tableau of its shape
    cp = rs_cells(4)
    for cell in cp.cells:
        q = rs_insert(min(cell)).q
        assert len(cell) == len(enumerate_std(q.shape))
        assert q_fiber(q, 4) == cell


def test_partitions_agree_detects_mismatch():
    cp = approx_cells(3)
    merged = (cp.cells[0] | cp.cells[1],) + cp.cells[2:]
    fake = CellPartition(3, "fake", merged, cp.cell_of)
    assert not partitions_agree(cp, fake)
    assert partitions_agree(cp, rs_cells(3))


def test_cross_validated_cells():
    for n in range(1, 6):
        cp = cross_validated_cells(n)
        assert sum(len(c) for c in cp.cells) == factorial(n)


def test_is_union_of_left_cells():
    cp = approx_cells(3)
    assert is_union_of_left_cells(set(), cp)
    assert is_union_of_left_cells({S2, S1S2}, cp)
    assert not is_union_of_left_cells({S2}, cp)
    with pytest.raises(ValueError):
        is_union_of_left_cells({(1, 2)}, cp)


def test_local_union_check_examples():
    assert local_union_check(set(), 3)
    assert local_union_check({S2, S1S2}, 3)
    assert not local_union_check({S2}, 3)


def test_local_union_check_matches_global_on_translated_ideals():
    for n in range(2, 6):
        cp = approx_cells(n)
        for J in all_gensets(n):
            for w in min_left_coset_reps(J, n):
                X = translated_ideal(w, J)
                assert local_union_check(X, n) == is_union_of_left_cells(X, cp)


def test_local_union_check_matches_global_on_random_subsets():
    rng = random.Random(91)
    group = enumerate_group(4)
    cp = approx_cells(4)
    for _ in range(300):
        X = frozenset(rng.sample(group, rng.randint(0, 10)))
        assert local_union_check(X, 4) == is_union_of_left_cells(X, cp)


def test_translated_coset_sets_are_cell_unions():
    # D_J * w_J is a union of left cells, every J
    for n in range(2, 6):
        cp = approx_cells(n)
        for J in all_gensets(n):
            wJ = longest_element(J, n)
            X = {multiply(d, wJ) for d in min_left_coset_reps(J, n)}
            assert is_union_of_left_cells(X, cp)


def _initial_segment_gensets(n):
    return [frozenset(range(1, k + 1)) for k in range(1, n)]


def test_cell_restriction_compatibility():
    # traces of cells on parabolic copies are unions of smaller cells:
    # for a cell X inside D_J*w_J and d in D_{K,J} with K an initial
    # segment, the set {y in W_K : y*d in X*w_J^-1}, translated by the
    # longest element of M = K n dJd^-1, is a union of left cells of
    # the smaller symmetric group.
    for n in range(3, 6):
        cp = approx_cells(n)
        for J in all_gensets(n):
            wJ = longest_element(J, n)
            coset_reps = min_left_coset_reps(J, n)
            translated = {multiply(d, wJ) for d in coset_reps}
            cells_inside = [c for c in cp.cells if c <= translated]
            for K in _initial_segment_gensets(n):
                k = len(K)
                small = approx_cells(k + 1)
                members_K = parabolic_members(K, n)
                for d in double_coset_reps(K, J, n):
                    dJd = _conjugated_genset(d, J)
                    M = dJd & K
                    wM = longest_element(M, n)
                    for X in cells_inside:
                        X0 = {multiply(x, inverse(wJ)) for x in X}
                        Y = {y for y in members_K if multiply(y, d) in X0}
                        assert all(in_DJ(y, M) for y in Y)
                        trace = {_truncate(multiply(y, wM), k + 1) for y in Y}
                        assert is_union_of_left_cells(trace, small)


def _conjugated_genset(d, J):
    out = set()
    for j in J:
        a, b = d[j - 1], d[j]
        if abs(a - b) == 1:
            out.add(min(a, b))
    return frozenset(out)


def _truncate(w, k):
    assert all(v == i for i, v in enumerate(w[k:], start=k + 1))
    return w[:k]
