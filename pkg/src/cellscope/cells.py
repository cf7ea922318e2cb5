"""
Kazhdan-Lusztig left cells of the symmetric group, by two independent
routes:

* closure of the elementary relations x ~ s_i*x, taken whenever s_i*x
  is longer than x and the left descent set of x is not contained in
  that of s_i*x (union-find over all such edges);

* fibers of the recording tableau of the Robinson-Schensted
  correspondence.

The two must produce the same partition; `cross_validated_cells` checks
this and is the entry point used by the verification pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .perms import (
    Perm,
    check_rank_cap,
    enumerate_group,
    left_descent_mask,
    left_mult_gen,
    lehmer_rank,
)
from .tableaux import SkewShape, SkewTableau


@dataclass(frozen=True)
class CellPartition:
    """Partition of the rank-n symmetric group into left cells.

    `cells` are frozensets sorted by their lexicographically least
    member; `cell_of` maps the lexicographic (Lehmer) rank of a
    permutation to its cell index, so lookups cost one array access.
    """

    n: int
    method: str
    cells: tuple[frozenset[Perm], ...]
    cell_of: tuple[int, ...] = field(repr=False)

    def cell_id(self, w: Perm) -> int:
        if len(w) != self.n:
            raise ValueError(f"rank mismatch: {len(w)} vs {self.n}")
        return self.cell_of[lehmer_rank(w)]

    def cell_containing(self, w: Perm) -> frozenset[Perm]:
        return self.cells[self.cell_id(w)]


def _build_partition(n: int, method: str, groups) -> CellPartition:
    cells = tuple(sorted((frozenset(g) for g in groups), key=min))
    cell_of = [0] * sum(len(c) for c in cells)
    for idx, cell in enumerate(cells):
        for w in cell:
            cell_of[lehmer_rank(w)] = idx
    return CellPartition(n, method, cells, tuple(cell_of))


def approx_cells(n: int) -> CellPartition:
    """
    Left cells as classes of the equivalence generated by x ~ s_i*x
    for l(s_i*x) > l(x) with the left descents of x not all remaining
    descents of s_i*x.
    """
    check_rank_cap(n)
    return _approx_cells(n)


@lru_cache(maxsize=None)
def _approx_cells(n: int) -> CellPartition:
    group = enumerate_group(n)
    index = {w: k for k, w in enumerate(group)}
    masks = [left_descent_mask(w) for w in group]
    parent = list(range(len(group)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for k, w in enumerate(group):
        mask = masks[k]
        for i in range(1, n):
            if mask & (1 << (i - 1)):
                continue  # s_i*w is shorter; the edge is generated from the other side
            j = index[left_mult_gen(i, w)]
            if mask & ~masks[j]:
                ra, rb = find(k), find(j)
                if ra != rb:
                    parent[ra] = rb

    groups: dict[int, list[Perm]] = {}
    for k, w in enumerate(group):
        groups.setdefault(find(k), []).append(w)
    return _build_partition(n, "approx", groups.values())


@dataclass(frozen=True)
class StandardPairing:
    """Insertion tableau and recording tableau of the same straight shape."""

    p: SkewTableau
    q: SkewTableau


def _insert_rows(w: Perm) -> tuple[list[list[int]], list[list[int]]]:
    prows: list[list[int]] = []
    qrows: list[list[int]] = []
    for step, value in enumerate(w, start=1):
        x = value
        for r, row in enumerate(prows):
            k = _first_greater(row, x)
            if k == len(row):
                row.append(x)
                qrows[r].append(step)
                break
            row[k], x = x, row[k]
        else:
            prows.append([x])
            qrows.append([step])
    return prows, qrows


def _first_greater(row: list[int], x: int) -> int:
    lo, hi = 0, len(row)
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _rows_to_tableau(rows: list[list[int]]) -> SkewTableau:
    shape = SkewShape(tuple(len(r) for r in rows))
    entries = {(i + 1, j + 1): v for i, row in enumerate(rows) for j, v in enumerate(row)}
    return SkewTableau(shape, entries)


def rs_insert(w: Perm) -> StandardPairing:
    """
    Robinson-Schensted row insertion of w(1), ..., w(n); the recording
    tableau marks the order in which boxes appear.

    >>> pair = rs_insert((2, 3, 1))
    >>> pair.p.rows(), pair.q.rows()
    (((1, 3), (2,)), ((1, 2), (3,)))
    """
    prows, qrows = _insert_rows(w)
    return StandardPairing(_rows_to_tableau(prows), _rows_to_tableau(qrows))


def recording_rows(w: Perm) -> tuple[tuple[int, ...], ...]:
    """Recording tableau as a bare tuple of rows, cheap enough for grouping."""
    _, qrows = _insert_rows(w)
    return tuple(tuple(r) for r in qrows)


def rs_cells(n: int) -> CellPartition:
    """Left cells as fibers of the recording tableau."""
    check_rank_cap(n)
    return _rs_cells(n)


@lru_cache(maxsize=None)
def _rs_cells(n: int) -> CellPartition:
    groups: dict[tuple, list[Perm]] = {}
    for w in enumerate_group(n):
        groups.setdefault(recording_rows(w), []).append(w)
    return _build_partition(n, "rs", groups.values())


class CellOracleMismatch(RuntimeError):
    """The two cell constructions disagree; carries a violating pair."""


def partitions_agree(a: CellPartition, b: CellPartition) -> bool:
    return set(a.cells) == set(b.cells)


def cross_validated_cells(n: int) -> CellPartition:
    """
    The closure-based partition, after checking it coincides with the
    recording-tableau fibers.  Disagreement aborts with a diagnostic
    naming a pair classified differently by the two routes.
    """
    by_closure = approx_cells(n)
    by_fibers = rs_cells(n)
    if not partitions_agree(by_closure, by_fibers):
        for w in enumerate_group(n):
            for v in by_closure.cell_containing(w):
                if by_fibers.cell_id(v) != by_fibers.cell_id(w):
                    raise CellOracleMismatch(
                        f"rank {n}: {w} ~ {v} under the closure relation but their "
                        "recording tableaux differ"
                    )
            for v in by_fibers.cell_containing(w):
                if by_closure.cell_id(v) != by_closure.cell_id(w):
                    raise CellOracleMismatch(
                        f"rank {n}: {w} and {v} share a recording tableau but the "
                        "closure relation separates them"
                    )
        raise CellOracleMismatch(f"rank {n}: partitions differ")
    return by_closure


def is_union_of_left_cells(X, cp: CellPartition) -> bool:
    """True iff every cell meeting X is contained in X."""
    members = frozenset(X)
    touched = set()
    for w in members:
        touched.add(cp.cell_id(w))
    return all(cp.cells[k] <= members for k in touched)


def local_union_check(X, n: int) -> bool:
    """
    Rank-2 locality criterion: X is a union of left cells iff for every
    adjacent generator pair (s, t) = (s_i, s_{i+1}) and every d that is
    shortest in its coset under the pair's parabolic, the trace
    {y in <s,t> : y*d in X} is a union of the rank-2 cells
    {1}, {t, st}, {s, ts}, {sts}.
    """
    members = frozenset(X)
    if not members:
        return True
    for i in range(1, n - 1):
        pair_mask = (1 << (i - 1)) | (1 << i)
        for d in enumerate_group(n):
            if left_descent_mask(d) & pair_mask:
                continue
            s = left_mult_gen(i, d)  # s*d
            t = left_mult_gen(i + 1, d)  # t*d
            st = left_mult_gen(i, t)  # s*t*d
            ts = left_mult_gen(i + 1, s)  # t*s*d
            if ((t in members) != (st in members)) or ((s in members) != (ts in members)):
                return False
    return True


def q_symbol(w: Perm) -> SkewTableau:
    """The recording tableau of w."""
    return rs_insert(w).q


def q_fiber(q: SkewTableau, n: int) -> frozenset[Perm]:
    """All rank-n permutations whose recording tableau is q."""
    key = tuple(q.rows())
    return frozenset(w for w in enumerate_group(n) if recording_rows(w) == key)
