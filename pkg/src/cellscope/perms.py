"""
Permutations of {1, ..., n} in one-line notation.

A permutation w of rank n is the tuple of its images (w(1), ..., w(n)),
with the left operator convention: (x*y)(i) = x(y(i)).  The simple
transposition s_i swaps i and i+1; multiplying by s_i on the left swaps
the *values* i and i+1 of a permutation, multiplying on the right swaps
the entries in *positions* i and i+1.

Generator subsets are frozensets of indices i with 1 <= i < n, index i
standing for s_i.  The string form of a permutation is comma-separated
images ("3,1,2" maps 1 to 3), that of a generator subset comma-separated
indices ("1,3" means {s_1, s_3}, "" the empty set).

Whole-group enumerations are capped at rank 9 by default; the environment
variable CELLSCOPE_RANK_CAP overrides the cap.
"""

from __future__ import annotations

import os
from itertools import permutations as _all_tuples
from math import factorial

Perm = tuple[int, ...]
GenSet = frozenset[int]

DEFAULT_RANK_CAP = 9


def rank_cap() -> int:
    """Largest rank for which whole-group tables may be built."""
    return int(os.environ.get("CELLSCOPE_RANK_CAP", DEFAULT_RANK_CAP))


def check_rank_cap(n: int) -> None:
    cap = rank_cap()
    if n > cap:
        raise ValueError(
            f"rank {n} exceeds the enumeration cap {cap}; "
            "raise CELLSCOPE_RANK_CAP to override"
        )


def is_perm(images) -> bool:
    """
    Check that `images` is a permutation of 1..n in one-line notation.

    >>> is_perm((3, 1, 2)), is_perm((1, 1, 2)), is_perm((0, 1))
    (True, False, False)
    """
    return sorted(images) == list(range(1, len(images) + 1))


def validate_perm(w: Perm) -> Perm:
    w = tuple(w)
    if not w or not is_perm(w):
        raise ValueError(f"not a permutation of 1..n in one-line notation: {w}")
    return w


def identity(n: int) -> Perm:
    """
    The identity permutation of rank n.

    >>> identity(3)
    (1, 2, 3)
    """
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    return tuple(range(1, n + 1))


def multiply(x: Perm, y: Perm) -> Perm:
    """
    Product x*y under the left operator convention, (x*y)(i) = x(y(i)).

    >>> multiply((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(x) != len(y):
        raise ValueError(f"rank mismatch: {len(x)} vs {len(y)}")
    return tuple(x[v - 1] for v in y)


def inverse(w: Perm) -> Perm:
    """
    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def simple_transposition(i: int, n: int) -> Perm:
    """The generator s_i of rank n, swapping i and i+1."""
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def left_mult_gen(i: int, w: Perm) -> Perm:
    """s_i * w: swap the values i and i+1 in the one-line notation."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def right_mult_gen(w: Perm, i: int) -> Perm:
    """w * s_i: swap the entries in positions i and i+1."""
    images = list(w)
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def length(w: Perm) -> int:
    """
    Coxeter length of w: the number of inversions.

    >>> length((3, 2, 1))
    3
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def right_descents(w: Perm) -> GenSet:
    """Indices i with w(i) > w(i+1), i.e. l(w s_i) < l(w)."""
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def left_descents(w: Perm) -> GenSet:
    """Indices i with l(s_i w) < l(w): the value i+1 precedes the value i."""
    inv = inverse(w)
    return frozenset(i for i in range(1, len(w)) if inv[i] < inv[i - 1])


def left_descent_mask(w: Perm) -> int:
    """left_descents as a bitmask; bit i-1 set iff i is a left descent."""
    inv = inverse(w)
    mask = 0
    for i in range(1, len(w)):
        if inv[i] < inv[i - 1]:
            mask |= 1 << (i - 1)
    return mask


def right_descent_mask(w: Perm) -> int:
    mask = 0
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            mask |= 1 << (i - 1)
    return mask


def left_weak_leq(y: Perm, x: Perm) -> bool:
    """
    Left weak order: y <=_L x iff l(x y^-1) = l(x) - l(y).

    >>> left_weak_leq((2, 1, 3), (3, 1, 2))
    True
    """
    if len(y) != len(x):
        raise ValueError(f"rank mismatch: {len(y)} vs {len(x)}")
    return length(multiply(x, inverse(y))) == length(x) - length(y)


def bruhat_leq(y: Perm, x: Perm) -> bool:
    """
    Bruhat order via the sorted-prefix dominance criterion: y <= x iff
    for every k the ascending sort of (y(1),...,y(k)) is entrywise at
    most that of (x(1),...,x(k)).

    >>> bruhat_leq((2, 1, 3), (3, 2, 1))
    True
    >>> bruhat_leq((3, 2, 1), (2, 1, 3))
    False
    """
    if len(y) != len(x):
        raise ValueError(f"rank mismatch: {len(y)} vs {len(x)}")
    ypre: list[int] = []
    xpre: list[int] = []
    for k in range(len(x) - 1):
        _insort(ypre, y[k])
        _insort(xpre, x[k])
        if any(a > b for a, b in zip(ypre, xpre)):
            return False
    return True


def _insort(acc: list[int], v: int) -> None:
    lo = 0
    while lo < len(acc) and acc[lo] < v:
        lo += 1
    acc.insert(lo, v)


def enumerate_group(n: int) -> tuple[Perm, ...]:
    """All n! permutations of rank n in lexicographic order."""
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    check_rank_cap(n)
    return tuple(_all_tuples(range(1, n + 1)))


def principal_weak_ideal(w: Perm) -> frozenset[Perm]:
    """
    {v : v <=_L w}, computed by walking down along left descents.

    >>> sorted(principal_weak_ideal((3, 1, 2)))
    [(1, 2, 3), (2, 1, 3), (3, 1, 2)]
    """
    seen = {w}
    stack = [w]
    while stack:
        u = stack.pop()
        for i in left_descents(u):
            v = left_mult_gen(i, u)
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return frozenset(seen)


def is_weak_ideal(X) -> bool:
    """
    True iff X is downward closed in the left weak order.  The covers
    going down from w are s_i*w for the left descents i of w, so it is
    enough to check those.
    """
    members = frozenset(X)
    for w in members:
        for i in left_descents(w):
            if left_mult_gen(i, w) not in members:
                return False
    return True


def lehmer_rank(w: Perm) -> int:
    """
    Position of w in the lexicographic ordering of its rank's group;
    a perfect index into whole-group tables.

    >>> [lehmer_rank(w) for w in enumerate_group(3)] == list(range(6))
    True
    """
    n = len(w)
    r = 0
    for i in range(n):
        smaller_later = sum(1 for j in range(i + 1, n) if w[j] < w[i])
        r += smaller_later * factorial(n - 1 - i)
    return r


def format_perm(w: Perm) -> str:
    return ",".join(str(v) for v in w)


def parse_perm(text: str) -> Perm:
    try:
        images = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed permutation token: {text!r}") from None
    if not is_perm(images):
        raise ValueError(f"not a permutation of 1..n: {text!r}")
    return images


def format_genset(J) -> str:
    return ",".join(str(i) for i in sorted(J))


def parse_genset(text: str, n: int) -> GenSet:
    if text.strip() == "":
        return frozenset()
    try:
        members = frozenset(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed generator-set token: {text!r}") from None
    bad = [i for i in members if not 1 <= i <= n - 1]
    if bad:
        raise ValueError(f"generator index {bad[0]} out of range 1..{n - 1}")
    return members
