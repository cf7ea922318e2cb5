"""
Partitions, skew shapes and standard skew tableaux.

Boxes are 1-based (row, col) pairs, row 1 at the top.  A skew shape is a
pair of partitions mu inside lam; a skew tableau is a bijective filling
of its boxes by the interval [m+1, m+n], where m is the tableau's offset
(0 unless stated) and n the number of boxes.

Two canonical standard fillings recur everywhere: the row-filled tableau
(1, 2, ... along row 1, then row 2, ...) and the column-filled tableau
(1, 2, ... down column 1, then column 2, ...).  The column-filled tableau
is the base point of the bijection between fillings and permutations:
perm(t) is the permutation carrying the column filling to t.

Shapes are written "3,2,2/1,1" (inner partition omitted when empty);
tableaux serialize to JSON as {"lambda": [...], "mu": [...], "m": 0,
"entries": [[row, col, value], ...]} with entries sorted by box.
"""

from __future__ import annotations

from functools import cached_property

from .parabolic import in_DJ
from .perms import GenSet, Perm

Partition = tuple[int, ...]


def conjugate(parts) -> Partition:
    """
    Transpose of the diagram; tolerates trailing zero parts.

    >>> conjugate((3, 1))
    (2, 1, 1)
    """
    parts = tuple(parts)
    if not parts or parts[0] == 0:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def part_at(parts, i: int) -> int:
    """The i-th part (1-based), zero beyond the last part."""
    return parts[i - 1] if 1 <= i <= len(parts) else 0


def _validate_partition(parts, name: str) -> Partition:
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p < 1 for p in parts):
        raise ValueError(f"{name} has a nonpositive part: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{name} is not weakly decreasing: {parts}")
    return parts


class SkewShape:
    """Skew shape lam/mu; mu may be empty.  Immutable and hashable."""

    __slots__ = ("lam", "mu", "__dict__")

    def __init__(self, lam, mu=()):
        lam = _validate_partition(lam, "outer partition")
        mu = _validate_partition(mu, "inner partition")
        if len(mu) > len(lam) or any(
            part_at(mu, i) > part_at(lam, i) for i in range(1, len(lam) + 1)
        ):
            raise ValueError(f"inner partition {mu} not contained in {lam}")
        self.lam = lam
        self.mu = mu

    @property
    def n(self) -> int:
        return sum(self.lam) - sum(self.mu)

    @property
    def num_rows(self) -> int:
        return len(self.lam)

    @property
    def num_cols(self) -> int:
        return self.lam[0] if self.lam else 0

    @cached_property
    def lam_conj(self) -> Partition:
        return conjugate(self.lam)

    @cached_property
    def mu_conj(self) -> Partition:
        return conjugate(self.mu)

    @cached_property
    def boxes(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j)
            for i in range(1, len(self.lam) + 1)
            for j in range(part_at(self.mu, i) + 1, self.lam[i - 1] + 1)
        )

    def __contains__(self, box) -> bool:
        i, j = box
        return 1 <= i <= len(self.lam) and part_at(self.mu, i) < j <= self.lam[i - 1]

    @property
    def is_basic(self) -> bool:
        """No empty rows and no empty columns."""
        rows_ok = all(
            self.lam[i - 1] > part_at(self.mu, i) for i in range(1, self.num_rows + 1)
        )
        cols_ok = all(
            part_at(self.lam_conj, j) > part_at(self.mu_conj, j)
            for j in range(1, self.num_cols + 1)
        )
        return rows_ok and cols_ok

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewShape)
            and self.lam == other.lam
            and self.mu == other.mu
        )

    def __hash__(self) -> int:
        return hash((self.lam, self.mu))

    def __repr__(self) -> str:
        return f"SkewShape({self.lam}, {self.mu})"


def remove_empty_rows(shape: SkewShape) -> SkewShape:
    """Drop the rows with no boxes, keeping the remaining rows in order."""
    kept = [
        (shape.lam[i - 1], part_at(shape.mu, i))
        for i in range(1, shape.num_rows + 1)
        if shape.lam[i - 1] > part_at(shape.mu, i)
    ]
    return SkewShape(tuple(l for l, _ in kept), tuple(m for _, m in kept))


def remove_empty_cols(shape: SkewShape) -> SkewShape:
    """Drop the columns with no boxes, keeping the remaining columns in order."""
    kept = [
        (part_at(shape.lam_conj, j), part_at(shape.mu_conj, j))
        for j in range(1, shape.num_cols + 1)
        if part_at(shape.lam_conj, j) > part_at(shape.mu_conj, j)
    ]
    return SkewShape(conjugate(tuple(l for l, _ in kept)), conjugate(tuple(m for _, m in kept)))


def drop_empty_cols(t: SkewTableau) -> SkewTableau:
    """The same filling with the empty columns of the shape deleted."""
    shape = t.shape
    new_col = {}
    for j in range(1, shape.num_cols + 1):
        if part_at(shape.lam_conj, j) > part_at(shape.mu_conj, j):
            new_col[j] = len(new_col) + 1
    entries = {(i, new_col[j]): v for (i, j), v in t._entries.items()}
    return SkewTableau(remove_empty_cols(shape), entries, t.m)


class SkewTableau:
    """Bijective filling of a skew shape by [m+1, m+n]."""

    __slots__ = ("shape", "m", "_entries", "_box_of", "_key")

    def __init__(self, shape: SkewShape, entries, m: int = 0):
        self.shape = shape
        self.m = m
        self._entries = dict(entries)
        n = shape.n
        if set(self._entries) != set(shape.boxes):
            raise ValueError("entries do not cover exactly the boxes of the shape")
        if sorted(self._entries.values()) != list(range(m + 1, m + n + 1)):
            raise ValueError(f"entries are not a bijection onto [{m + 1}, {m + n}]")
        self._box_of = {v: b for b, v in self._entries.items()}
        self._key = (shape.lam, shape.mu, m, tuple(self._entries[b] for b in shape.boxes))

    @property
    def n(self) -> int:
        return self.shape.n

    def __getitem__(self, box) -> int:
        return self._entries[box]

    def get(self, box, default=None):
        return self._entries.get(box, default)

    def box_of(self, value: int) -> tuple[int, int]:
        return self._box_of[value]

    def row_of(self, value: int) -> int:
        return self._box_of[value][0]

    def col_of(self, value: int) -> int:
        return self._box_of[value][1]

    def entries(self) -> tuple[tuple[int, int, int], ...]:
        """(row, col, value) triples sorted by box."""
        return tuple((i, j, self._entries[(i, j)]) for i, j in self.shape.boxes)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Row contents left to right, skew holes omitted."""
        out = []
        for i in range(1, self.shape.num_rows + 1):
            row = [
                self._entries[(i, j)]
                for j in range(part_at(self.shape.mu, i) + 1, self.shape.lam[i - 1] + 1)
            ]
            out.append(tuple(row))
        return tuple(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewTableau) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        width = max((len(str(v)) for v in self._box_of), default=1)
        lines = []
        for i in range(1, self.shape.num_rows + 1):
            cells = []
            for j in range(1, self.shape.lam[i - 1] + 1):
                v = self._entries.get((i, j))
                cells.append(str(v).rjust(width) if v is not None else "." * width)
            lines.append(" ".join(cells))
        return "\n".join(lines) if lines else "(empty tableau)"


def tau_top(shape: SkewShape, m: int = 0) -> SkewTableau:
    """
    The row-filled standard tableau: entries m+1, m+2, ... run along
    row 1 left to right, then row 2, and so on.  This is the maximal
    element of the standard fillings in the left weak order.
    """
    entries = {}
    acc = 0
    for i in range(1, shape.num_rows + 1):
        mu_i = part_at(shape.mu, i)
        for j in range(mu_i + 1, shape.lam[i - 1] + 1):
            entries[(i, j)] = m + (j - mu_i) + acc
        acc += shape.lam[i - 1] - mu_i
    return SkewTableau(shape, entries, m)


def _tau_col_values(shape: SkewShape) -> dict[tuple[int, int], int]:
    values = {}
    acc = 0
    for j in range(1, shape.num_cols + 1):
        mu_j = part_at(shape.mu_conj, j)
        lam_j = part_at(shape.lam_conj, j)
        for i in range(mu_j + 1, lam_j + 1):
            values[(i, j)] = (i - mu_j) + acc
        acc += lam_j - mu_j
    return values


def tau_col(shape: SkewShape, m: int = 0) -> SkewTableau:
    """
    The column-filled standard tableau: entries m+1, m+2, ... run down
    column 1 top to bottom, then column 2, and so on.
    """
    return SkewTableau(shape, {b: m + v for b, v in _tau_col_values(shape).items()}, m)


def is_standard(t: SkewTableau) -> bool:
    """Entries strictly increase along rows and down columns."""
    for (i, j), v in t._entries.items():
        right = t._entries.get((i, j + 1))
        if right is not None and v >= right:
            return False
        below = t._entries.get((i + 1, j))
        if below is not None and v >= below:
            return False
    return True


def enumerate_std(shape: SkewShape, m: int = 0, max_boxes: int = 12) -> list[SkewTableau]:
    """
    All standard fillings, by placing m+1, ..., m+n one at a time into
    boxes whose upper and left neighbours are already filled.  Returned
    in the canonical order (entry sequence read in box order).
    """
    n = shape.n
    if n > max_boxes:
        raise ValueError(f"shape has {n} boxes, above the enumeration cap {max_boxes}")
    boxes = shape.boxes
    filled: dict[tuple[int, int], int] = {}
    out: list[SkewTableau] = []

    def ready(box) -> bool:
        i, j = box
        up = (i - 1, j)
        left = (i, j - 1)
        return (up not in shape or up in filled) and (left not in shape or left in filled)

    def place(value: int) -> None:
        if value > m + n:
            out.append(SkewTableau(shape, dict(filled), m))
            return
        for box in boxes:
            if box not in filled and ready(box):
                filled[box] = value
                place(value + 1)
                del filled[box]

    place(m + 1)
    out.sort(key=lambda t: t._key)
    return out


def apply_perm(w: Perm, t: SkewTableau) -> SkewTableau:
    """
    Act on the entries: the box holding value m+v now holds m+w(v).
    The rank of w must equal the number of boxes.
    """
    if len(w) != t.n:
        raise ValueError(f"rank mismatch: permutation {len(w)} vs {t.n} boxes")
    return SkewTableau(t.shape, {b: t.m + w[v - t.m - 1] for b, v in t._entries.items()}, t.m)


def shift(t: SkewTableau, h: int) -> SkewTableau:
    """Add h to every entry, moving the offset from m to m+h."""
    return SkewTableau(t.shape, {b: v + h for b, v in t._entries.items()}, t.m + h)


def perm_of(t: SkewTableau) -> Perm:
    """
    The permutation w with w * (column filling) = t: if the column
    filling puts c in a box and t puts m+v there, then w(c) = v.
    For offset m > 0 this is the rank-n permutation of the shifted
    window [m+1, m+n]; the caller keeps track of m.

    >>> from cellscope.tableaux import SkewShape, tau_top, perm_of
    >>> perm_of(tau_top(SkewShape((2, 1))))
    (1, 3, 2)
    """
    images = [0] * t.n
    for b, c in _tau_col_values(t.shape).items():
        images[c - 1] = t._entries[b] - t.m
    return tuple(images)


def word_of(t: SkewTableau) -> Perm:
    """
    The reading word of a standard tableau with offset 0: rows are
    concatenated from the last row to the first, giving a permutation
    in one-line notation.
    """
    if t.m != 0:
        raise ValueError("reading word requires offset 0")
    if not is_standard(t):
        raise ValueError("reading word requires a standard tableau")
    word = []
    for row in reversed(t.rows()):
        word.extend(row)
    return tuple(word)


def shape_genset(shape: SkewShape) -> GenSet:
    """
    The generator indices i such that i and i+1 sit in the same column
    of the column filling: one run of consecutive indices per column,
    broken at every column boundary.
    """
    members = []
    acc = 0
    for j in range(1, shape.num_cols + 1):
        h = part_at(shape.lam_conj, j) - part_at(shape.mu_conj, j)
        members.extend(range(acc + 1, acc + h))
        acc += h
    return frozenset(members)


def restrict_below(t: SkewTableau, k: int) -> SkewTableau:
    """
    Remove every box with entry >= k.  For standard t the kept boxes
    form a skew shape over the same inner partition; the offset stays m
    and the result has k-m-1 boxes.
    """
    if not t.m < k <= t.m + t.n + 1:
        raise ValueError(f"cut point {k} outside ({t.m}, {t.m + t.n + 1}]")
    if not is_standard(t):
        raise ValueError("restriction requires a standard tableau")
    kept = {b: v for b, v in t._entries.items() if v < k}
    counts = _row_counts(kept, t.shape.num_rows)
    kappa = tuple(part_at(t.shape.mu, i) + counts[i - 1] for i in range(1, t.shape.num_rows + 1))
    return SkewTableau(SkewShape(kappa, t.shape.mu), kept, t.m)


def restrict_above(t: SkewTableau, k: int) -> SkewTableau:
    """
    Remove every box with entry <= k.  The removed boxes join the inner
    partition; the result has offset k and m+n-k boxes.
    """
    if not t.m <= k <= t.m + t.n:
        raise ValueError(f"cut point {k} outside [{t.m}, {t.m + t.n}]")
    if not is_standard(t):
        raise ValueError("restriction requires a standard tableau")
    kept = {b: v for b, v in t._entries.items() if v > k}
    removed = {b: v for b, v in t._entries.items() if v <= k}
    counts = _row_counts(removed, t.shape.num_rows)
    nu = tuple(part_at(t.shape.mu, i) + counts[i - 1] for i in range(1, t.shape.num_rows + 1))
    return SkewTableau(SkewShape(t.shape.lam, nu), kept, k)


def _row_counts(entries, num_rows: int) -> list[int]:
    counts = [0] * num_rows
    for (i, _), _v in entries.items():
        counts[i - 1] += 1
    return counts


def slide_bound(t: SkewTableau, j: int) -> int:
    """
    How far column j of a standard tableau can slide up while the
    tableau stays standard: the largest k bounded by both conjugate
    gaps (lam*_j - lam*_{j+1} and mu*_j - mu*_{j+1}) such that every
    slid entry t(i+k, j) stays below its right neighbour t(i, j+1).
    """
    shape = t.shape
    if not 1 <= j <= shape.num_cols:
        raise ValueError(f"column {j} out of range 1..{shape.num_cols}")
    lc, mc = shape.lam_conj, shape.mu_conj
    cap = min(
        part_at(lc, j) - part_at(lc, j + 1),
        part_at(mc, j) - part_at(mc, j + 1),
    )
    k = 0
    while k < cap and _slides_cleanly(t, j, k + 1):
        k += 1
    return k


def _slides_cleanly(t: SkewTableau, j: int, k: int) -> bool:
    lo = part_at(t.shape.mu_conj, j) - k
    hi = part_at(t.shape.lam_conj, j + 1)
    return all(t._entries[(i + k, j)] < t._entries[(i, j + 1)] for i in range(lo + 1, hi + 1))


def squash(t: SkewTableau) -> SkewTableau:
    """
    Slide every column as far up as it can go, cumulatively from the
    right: column j moves up by delta_j = sum of the slide bounds of
    columns j..last, computed on the input tableau.  The result is the
    canonical representative of t among the standard tableaux with the
    same columns; squash(squash(t)) == squash(t) and the associated
    permutation is unchanged.
    """
    shape = t.shape
    cols = shape.num_cols
    if cols == 0:
        return t
    bounds = [slide_bound(t, j) for j in range(1, cols + 1)]
    delta = list(bounds)
    for j in range(cols - 2, -1, -1):
        delta[j] += delta[j + 1]
    zeta_conj = tuple(part_at(shape.lam_conj, j + 1) - delta[j] for j in range(cols))
    eta_conj = tuple(part_at(shape.mu_conj, j + 1) - delta[j] for j in range(cols))
    new_shape = SkewShape(conjugate(zeta_conj), conjugate(eta_conj))
    entries = {(i, j): t._entries[(i + delta[j - 1], j)] for (i, j) in new_shape.boxes}
    return SkewTableau(new_shape, entries, t.m)


def is_squashed(t: SkewTableau) -> bool:
    return squash(t) == t


def staircase_shape(J, n: int) -> SkewShape:
    """
    The unique shape with n rows of length 1 whose column filling has
    the point blocks of J as its columns: one column per block, later
    blocks higher, no two columns sharing a row.
    """
    from .parabolic import point_blocks

    heights = [len(b) for b in point_blocks(J, n)]
    lam: list[int] = []
    mu: list[int] = []
    for col in range(len(heights), 0, -1):
        lam.extend([col] * heights[col - 1])
        mu.extend([col - 1] * heights[col - 1])
    return SkewShape(tuple(lam), tuple(mu))


def canonical_tableau(J, w: Perm) -> SkewTableau:
    """
    The squashed standard tableau t with perm_of(t) = w whose shape has
    column group J: fill the staircase shape of J by columns, act by w,
    squash.  Requires w increasing on J (w in D_J).

    >>> from cellscope.tableaux import canonical_tableau, tau_top, SkewShape
    >>> canonical_tableau(frozenset({1}), (1, 3, 2)) == tau_top(SkewShape((2, 1)))
    True
    """
    n = len(w)
    if not in_DJ(w, J):
        raise ValueError(f"permutation {w} is not increasing on {sorted(J)}")
    return squash(apply_perm(w, tau_col(staircase_shape(J, n))))


def format_shape(shape: SkewShape) -> str:
    lam = ",".join(str(p) for p in shape.lam)
    if not shape.mu:
        return lam
    return lam + "/" + ",".join(str(p) for p in shape.mu)


def parse_shape(text: str) -> SkewShape:
    def parse_parts(chunk: str, name: str) -> Partition:
        if chunk.strip() == "":
            return ()
        try:
            return tuple(int(tok) for tok in chunk.split(","))
        except ValueError:
            raise ValueError(f"malformed {name} token: {chunk!r}") from None

    head, sep, tail = text.partition("/")
    lam = parse_parts(head, "shape")
    mu = parse_parts(tail, "inner shape") if sep else ()
    return SkewShape(lam, mu)


def tableau_to_json(t: SkewTableau) -> dict:
    return {
        "lambda": list(t.shape.lam),
        "mu": list(t.shape.mu),
        "m": t.m,
        "entries": [[i, j, v] for i, j, v in t.entries()],
    }


def tableau_from_json(data: dict) -> SkewTableau:
    shape = SkewShape(tuple(data["lambda"]), tuple(data.get("mu", ())))
    entries = {(int(i), int(j)): int(v) for i, j, v in data["entries"]}
    return SkewTableau(shape, entries, int(data.get("m", 0)))
