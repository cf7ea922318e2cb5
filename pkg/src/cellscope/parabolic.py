"""
Standard parabolic subgroups of the symmetric group.

A subset J of the generator indices determines the parabolic subgroup
W_J.  In type A everything is governed by the maximal runs of
consecutive indices in J: a run [a, b] means W_J permutes the point
block {a, ..., b+1} freely.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import (
    GenSet,
    Perm,
    enumerate_group,
    identity,
    inverse,
    left_descents,
    left_mult_gen,
    multiply,
)


def genset_runs(J) -> list[tuple[int, int]]:
    """Maximal runs [a, b] of consecutive indices in J, in increasing order."""
    runs = []
    for i in sorted(J):
        if runs and runs[-1][1] == i - 1:
            runs[-1][1] = i
        else:
            runs.append([i, i])
    return [(a, b) for a, b in runs]


def point_blocks(J, n: int) -> list[tuple[int, ...]]:
    """
    The partition of {1..n} into maximal intervals with i, i+1 in the
    same block iff i is in J.

    >>> point_blocks({1, 2, 4}, 6)
    [(1, 2, 3), (4, 5), (6,)]
    """
    blocks = [[1]]
    for p in range(2, n + 1):
        if p - 1 in J:
            blocks[-1].append(p)
        else:
            blocks.append([p])
    return [tuple(b) for b in blocks]


def longest_element(J, n: int) -> Perm:
    """
    The longest element w_J of W_J: each point block is reversed.

    >>> longest_element({1, 3}, 4)
    (2, 1, 4, 3)
    """
    images = list(range(1, n + 1))
    for a, b in genset_runs(J):
        lo, hi = a, b + 1
        images[lo - 1 : hi] = range(hi, lo - 1, -1)
    return tuple(images)


def in_DJ(w: Perm, J) -> bool:
    """True iff w is the minimal length element of the coset w W_J."""
    return all(w[i - 1] < w[i] for i in J)


def min_left_coset_reps(J, n: int) -> frozenset[Perm]:
    """D_J: the minimal length representatives of the cosets w W_J."""
    return frozenset(d for d in enumerate_group(n) if in_DJ(d, J))


def no_left_descents_in(w: Perm, K) -> bool:
    """True iff l(s_i w) > l(w) for every i in K, i.e. w lies in D_K^{-1}."""
    inv = inverse(w)
    return all(inv[i - 1] < inv[i] for i in K)


def double_coset_reps(K, J, n: int) -> frozenset[Perm]:
    """D_{K,J} = D_K^{-1} n D_J: minimal reps of the (W_K, W_J) double cosets."""
    return frozenset(
        d for d in enumerate_group(n) if no_left_descents_in(d, K) and in_DJ(d, J)
    )


@dataclass(frozen=True)
class CosetDecomposition:
    """w = left_component * min_rep with left_component in W_K and
    min_rep shortest in W_K w; the lengths add."""

    left_component: Perm
    min_rep: Perm
    K: GenSet


def left_decompose(w: Perm, K) -> CosetDecomposition:
    """
    Split w as x*d with x in W_K and d the minimal length element
    of the right coset W_K w.

    >>> left_decompose((2, 1, 3), {1}).min_rep
    (1, 2, 3)
    """
    K = frozenset(K)
    d = w
    while True:
        desc = left_descents(d) & K
        if not desc:
            break
        d = left_mult_gen(min(desc), d)
    x = multiply(w, inverse(d))
    return CosetDecomposition(x, d, K)


def parabolic_members(J, n: int) -> frozenset[Perm]:
    """All elements of W_J, by closure under the generators in J."""
    members = {identity(n)}
    frontier = [identity(n)]
    gens = sorted(J)
    while frontier:
        u = frontier.pop()
        for i in gens:
            v = left_mult_gen(i, u)
            if v not in members:
                members.add(v)
                frontier.append(v)
    return frozenset(members)


def in_parabolic(w: Perm, K) -> bool:
    """True iff w moves points only inside the K-blocks."""
    blocks = point_blocks(K, len(w))
    lookup = {}
    for bi, b in enumerate(blocks):
        for p in b:
            lookup[p] = bi
    return all(lookup[w[p - 1]] == lookup[p] for p in range(1, len(w) + 1))
