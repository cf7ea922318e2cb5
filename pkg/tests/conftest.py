"""Shared enumeration and randomization helpers for the test suite."""

from __future__ import annotations

import random
from itertools import permutations

from cellscope.classify import _partitions_in_box, _subpartitions
from cellscope.tableaux import (
    SkewShape,
    SkewTableau,
    conjugate,
    enumerate_std,
    part_at,
)


def is_trim_canonical(s: SkewShape) -> bool:
    """First and last row and column of the diagram all hold a box.

    Shapes failing this are marginal paddings of smaller-box shapes;
    interior empty rows and columns are still allowed.
    """
    if not s.lam:
        return False
    rows, cols = s.num_rows, s.num_cols
    return (
        s.lam[0] > part_at(s.mu, 1)
        and s.lam[-1] > part_at(s.mu, rows)
        and part_at(s.lam_conj, 1) > part_at(s.mu_conj, 1)
        and part_at(s.lam_conj, cols) > part_at(s.mu_conj, cols)
    )


def iter_skew_shapes(n: int) -> list[SkewShape]:
    """All skew shapes with n boxes, up to marginal padding.

    Every shape with n boxes and nonempty margins fits in an n-by-n
    box, so this enumeration is exhaustive for that family (interior
    empty rows and columns included).
    """
    out = []
    for lam in _partitions_in_box(n, n):
        total = sum(lam)
        if total < n:
            continue
        for mu in _subpartitions(lam, total - n):
            s = SkewShape(lam, mu)
            if is_trim_canonical(s):
                out.append(s)
    out.sort(key=lambda s: (s.lam, s.mu))
    return out


def pad_shape(s: SkewShape, top: int = 0, left: int = 0) -> SkewShape:
    """Add `top` empty rows above and `left` empty columns before the diagram."""
    lam = tuple(p + left for p in s.lam)
    mu = tuple(part_at(s.mu, i) + left for i in range(1, len(s.lam) + 1))
    width = lam[0] if lam else left
    lam = (width,) * top + lam
    mu = (width,) * top + mu
    return SkewShape(lam, mu)


def repad_tableau(t: SkewTableau, top: int = 0, left: int = 0) -> SkewTableau:
    """The same filling on the padded copy of the shape."""
    shape = pad_shape(t.shape, top, left)
    entries = {(i + top, j + left): v for (i, j), v in t._entries.items()}
    return SkewTableau(shape, entries, t.m)


def brute_force_std(shape: SkewShape, m: int = 0) -> set[SkewTableau]:
    """Independent oracle: filter every bijective filling for standardness."""
    boxes = shape.boxes
    out = set()
    for values in permutations(range(m + 1, m + shape.n + 1)):
        t = SkewTableau(shape, dict(zip(boxes, values)), m)
        if _standard(t):
            out.add(t)
    return out


def _standard(t: SkewTableau) -> bool:
    for (i, j), v in t._entries.items():
        if (i, j + 1) in t.shape and v >= t[(i, j + 1)]:
            return False
        if (i + 1, j) in t.shape and v >= t[(i + 1, j)]:
            return False
    return True


def random_skew_shape(rng: random.Random, n: int) -> SkewShape:
    """Random shape with n boxes, built column by column from the right."""
    heights = []
    left = n
    while left:
        h = rng.randint(1, left)
        heights.append(h)
        left -= h
    cols = len(heights)
    tops = [0] * cols
    tops[cols - 1] = 1 + rng.randint(0, 2)
    for j in range(cols - 2, -1, -1):
        lower_bound = max(
            tops[j + 1], tops[j + 1] + heights[j + 1] - heights[j]
        )
        tops[j] = lower_bound + rng.randint(0, 2)
    mu_conj = tuple(t - 1 for t in tops)
    lam_conj = tuple(t + h - 1 for t, h in zip(tops, heights))
    return SkewShape(conjugate(lam_conj), conjugate(mu_conj))


def random_standard_tableau(rng: random.Random, shape: SkewShape, m: int = 0) -> SkewTableau:
    """Uniformly random linear extension of the box order."""
    filled: dict[tuple[int, int], int] = {}
    remaining = set(shape.boxes)
    for value in range(m + 1, m + shape.n + 1):
        ready = [
            (i, j)
            for (i, j) in remaining
            if ((i - 1, j) not in shape or (i - 1, j) in filled)
            and ((i, j - 1) not in shape or (i, j - 1) in filled)
        ]
        box = rng.choice(sorted(ready))
        filled[box] = value
        remaining.remove(box)
    return SkewTableau(shape, filled, m)


def embed_top(w: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Sym(k) -> Sym(n) fixing the points above k."""
    return tuple(list(w) + list(range(len(w) + 1, n + 1)))


def embed_window(w: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Sym(k) -> Sym(n) acting on {2, ..., k+1}, fixing 1 and the rest."""
    return tuple([1] + [v + 1 for v in w] + list(range(len(w) + 2, n + 1)))
