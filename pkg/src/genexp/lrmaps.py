"""Littlewood-Richardson tableau machinery.

Skew tableaux, jeu de taquin rectification, companion tableaux, the
conjugation symmetry map and the combinatorial R-matrix (Henriques-Kamnitzer
commutor) on highest weight tensor elements.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, Iterator, Sequence

from .crystal import (
    Tableau,
    crystal_e,
    lr_membership,
    lusztig_involution,
    lowest_tableau,
    tensor_lusztig_involution,
    to_highest_weight,
    weight,
    yamanouchi,
)
from .partitions import Partition, conjugate


class SkewTableau:
    """Semistandard filling of ``outer / inner``; ``rows[r]`` lists the skew cells of row ``r``."""

    __slots__ = ("outer", "inner", "rows")

    def __init__(self, outer, inner, rows, check: bool = True):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        rows = [tuple(int(x) for x in r) for r in rows]
        rows += [()] * (len(self.outer) - len(rows))
        self.rows = tuple(rows)
        if check:
            self._validate()

    def _validate(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner} is not contained in outer {self.outer}")
        if len(self.rows) != len(self.outer):
            raise ValueError("one row of entries per row of the outer shape is required")
        for r, row in enumerate(self.rows):
            if len(row) != self.outer.part(r + 1) - self.inner.part(r + 1):
                raise ValueError(f"row {r + 1} has {len(row)} entries, expected "
                                 f"{self.outer.part(r + 1) - self.inner.part(r + 1)}")
        if not self.is_semistandard():
            raise ValueError(f"not semistandard: {self}")

    @classmethod
    def from_cells(cls, outer, inner, cells: dict) -> "SkewTableau":
        outer, inner = Partition(outer), Partition(inner)
        rows = [[cells[(r, c)] for c in range(inner.part(r + 1), outer.part(r + 1))]
                for r in range(len(outer))]
        return cls(outer, inner, rows)

    @classmethod
    def from_tableau(cls, T: Tableau) -> "SkewTableau":
        return cls(T.shape, (), list(T))

    @classmethod
    def parse(cls, text: str) -> "SkewTableau":
        """Parse ``"outer|inner|rows"``, e.g. ``"5,4,4,2|3,3,1|1,1/2/1,2,3/1,2"``."""
        try:
            outer, inner, body = text.split("|")
        except ValueError:
            raise ValueError(f"skew tableau text needs three '|'-separated fields: {text!r}") from None
        outer = Partition.parse(outer)
        inner = Partition.parse(inner)
        rows = [[int(x) for x in row.split(",") if x.strip()] for row in body.split("/")] if body else []
        # rows with no skew cells may be written empty or omitted at the top
        if len(rows) < len(outer):
            rows = [[] for _ in range(len(outer) - len(rows))] + rows
        return cls(outer, inner, rows)

    def __str__(self):
        return f"{self.outer}|{self.inner}|" + "/".join(",".join(map(str, r)) for r in self.rows)

    def __repr__(self):
        return f"SkewTableau({str(self)!r})"

    def __eq__(self, other):
        return (isinstance(other, SkewTableau) and self.outer == other.outer
                and self.inner == other.inner and self.rows == other.rows)

    def __hash__(self):
        return hash((self.outer, self.inner, self.rows))

    def cells(self) -> dict:
        out = {}
        for r, row in enumerate(self.rows):
            start = self.inner.part(r + 1)
            for k, x in enumerate(row):
                out[(r, start + k)] = x
        return out

    def is_semistandard(self) -> bool:
        cells = self.cells()
        for (r, c), x in cells.items():
            if (r, c + 1) in cells and cells[(r, c + 1)] < x:
                return False
            if (r + 1, c) in cells and cells[(r + 1, c)] <= x:
                return False
            if x < 1:
                return False
        return True

    def reading_word(self) -> tuple[int, ...]:
        """Japanese reading: columns right to left, each top to bottom."""
        cells = self.cells()
        return tuple(cells[rc] for rc in sorted(cells, key=lambda rc: (-rc[1], rc[0])))

    def weight(self) -> tuple[int, ...]:
        word = self.reading_word()
        m = max(word, default=0)
        return tuple(word.count(k) for k in range(1, m + 1))


def is_lattice(word: Sequence[int]) -> bool:
    """Every left factor has at least as many ``i`` as ``i+1``."""
    counts: dict[int, int] = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def is_lr_skew(s: SkewTableau) -> bool:
    return s.is_semistandard() and is_lattice(s.reading_word())


# jeu de taquin


def _inner_corners(inner: list[int]) -> list[tuple[int, int]]:
    out = []
    for r, p in enumerate(inner):
        if p and (r + 1 == len(inner) or inner[r + 1] < p):
            out.append((r, p - 1))
    return out


def _slide(cells: dict, hole: tuple[int, int]) -> tuple[int, int]:
    """Slide ``hole`` out to the boundary; returns the vacated outer cell."""
    r, c = hole
    while True:
        right = cells.get((r, c + 1))
        below = cells.get((r + 1, c))
        if right is None and below is None:
            return r, c
        if below is not None and (right is None or below <= right):
            cells[(r, c)] = below
            del cells[(r + 1, c)]
            r += 1
        else:
            cells[(r, c)] = right
            del cells[(r, c + 1)]
            c += 1


def rectify(s: SkewTableau, rng: random.Random | None = None) -> Tableau:
    """Jeu de taquin rectification; ``rng`` picks a random inner corner at each slide."""
    cells = s.cells()
    inner = list(s.inner)
    while any(inner):
        corners = _inner_corners(inner)
        r, c = rng.choice(corners) if rng is not None else corners[-1]
        _slide(cells, (r, c))
        inner[r] -= 1
    shape_len = max((r for r, _ in cells), default=-1) + 1
    rows = [[] for _ in range(shape_len)]
    for (r, c) in sorted(cells):
        rows[r].append(cells[(r, c)])
    return Tableau(rows)


def evacuation(T: Tableau, m: int) -> Tableau:
    """Schutzenberger evacuation by rectifying the rotated, complemented tableau."""
    if not T:
        return T
    shape = T.shape
    height, width = len(shape), shape[0]
    outer = [width] * height
    inner = [width - shape.part(height - r) for r in range(height)]
    cells = {}
    for r, row in enumerate(T):
        for c, x in enumerate(row):
            cells[(height - 1 - r, width - 1 - c)] = m + 1 - x
    return rectify(SkewTableau.from_cells(outer, inner, cells))


# companion tableaux


def companion(tau: SkewTableau) -> Tableau:
    """Row ``k`` lists (sorted) the row numbers of ``tau`` holding an entry ``k``."""
    if not is_lr_skew(tau):
        raise ValueError(f"companion requires an LR skew tableau: {tau}")
    wt = tau.weight()
    rows: list[list[int]] = [[] for _ in wt]
    for r, row in enumerate(tau.rows):
        for x in row:
            rows[x - 1].append(r + 1)
    return Tableau(sorted(row) for row in rows)


def inverse_companion(T: Tableau, inner: Iterable[int]) -> SkewTableau:
    """The LR skew tableau with inner shape ``inner`` whose companion is ``T``."""
    inner = Partition(inner)
    filled: dict[int, list[int]] = {}
    for k, row in enumerate(T, start=1):
        for r in row:
            filled.setdefault(r, []).append(k)
    nrows = max([len(inner)] + list(filled))
    outer = Partition(inner.part(r) + len(filled.get(r, ())) for r in range(1, nrows + 1))
    rows = [sorted(filled.get(r, ())) for r in range(1, nrows + 1)]
    s = SkewTableau(outer, inner, rows, check=False)
    if not (outer.contains(inner) and is_lr_skew(s)):
        raise ValueError(f"{T} is not the companion of an LR tableau over {inner}")
    s._validate()
    return s


# conjugation symmetry


def reverse_padded(delta: Iterable[int], m: int) -> tuple[int, ...]:
    """``delta_rev`` of length ``m`` (leading zeros), indexed from 0."""
    delta = Partition(delta)
    if len(delta) > m:
        raise ValueError(f"delta {delta} has more than {m} parts")
    return tuple(delta.part(m - i) for i in range(m))


def lr_weight(T: Tableau, delta: Iterable[int], m: int) -> Partition:
    """``nu = delta + wt(T)`` for ``T`` in ``LR_{lambda,delta}^nu``."""
    delta = Partition(delta)
    wt = weight(T, m)
    return Partition(delta.part(i + 1) + wt[i] for i in range(m))


def conjugation_symmetry(T: Tableau, delta: Iterable[int], m: int) -> Tableau:
    """Bijection ``LR_{lambda,delta}^nu -> LR_{lambda',delta'}^{nu'}`` (evacuate, transpose, relabel)."""
    delta = Partition(delta)
    if T and T.max_entry() > m:
        raise ValueError(f"entries of {T} exceed alphabet size {m}")
    if not lr_membership(T, delta, m):
        raise ValueError(f"{T} is not in LR_(lambda,{delta}) over {m} letters")
    if not T:
        return T
    rev = reverse_padded(delta, m)
    st = lusztig_involution(T, m).transpose()
    rows = [list(r) for r in st]
    for i in range(1, m + 1):
        label = rev[i - 1]
        for r in range(len(rows)):  # vertical strip: at most one i per row, top is northeast
            for c, x in enumerate(st[r]):
                if x == i:
                    label += 1
                    rows[r][c] = label
    return Tableau(rows)


def conjugation_symmetry_inverse(Tc: Tableau, delta: Iterable[int], m: int) -> Tableau:
    """Undo :func:`conjugation_symmetry` by applying it again with ``delta'``."""
    delta = Partition(delta)
    nu = lr_weight_from_conjugate(Tc, delta)
    m_out = max(len(nu), 1)
    out = conjugation_symmetry(Tc, conjugate(delta), max(nu[0] if nu else 1, Tc.max_entry(), 1))
    if out and out.max_entry() > max(m, m_out):
        raise ValueError("inverse landed outside the alphabet")
    return out


def lr_weight_from_conjugate(Tc: Tableau, delta: Partition) -> Partition:
    dc = conjugate(delta)
    m = max(Tc.max_entry(), len(dc), 1)
    nu_c = lr_weight(Tc, dc, m)
    return conjugate(nu_c)


# combinatorial R-matrix


def commutor(b: Tableau, c: Tableau, m: int) -> tuple[Tableau, Tableau]:
    """Henriques-Kamnitzer commutor ``b (x) c -> xi(xi(c) (x) xi(b))`` (experimental off highest weight)."""
    x = (lusztig_involution(c, m), lusztig_involution(b, m))
    return tensor_lusztig_involution(x, m)


def r_matrix_highest(lam: Iterable[int], T: Tableau, m: int) -> tuple[Partition, Tableau]:
    """R-matrix image of the highest weight element ``H_lam (x) T``.

    Returns ``(delta, T_hat)`` with ``delta = shape(T)`` and ``H_delta (x) T_hat``
    the highest weight element of ``B(delta) (x) B(lam)`` matched by the
    commutor.  The commutor sends ``H_lam (x) T`` to the highest weight vertex of
    the component containing ``S(T) (x) lowest(lam)``.
    """
    lam = Partition(lam)
    H = yamanouchi(lam)
    if any(crystal_e((H, T), i, m) is not None for i in range(1, m)):
        raise ValueError(f"H_{lam} (x) {T} is not highest weight")
    delta = T.shape
    start = (lusztig_involution(T, m), lowest_tableau(lam, m))
    _, (top, T_hat) = to_highest_weight(start, m)
    if top != yamanouchi(delta):
        raise AssertionError("raised tensor does not start with a Yamanouchi factor")
    return delta, T_hat


# enumeration of LR skew tableaux


def enumerate_lr_skew(
    outer: Iterable[int],
    inner: Iterable[int],
    weight: Sequence[int] | None = None,
    max_letter: int | None = None,
    allowed: Callable[[int, int], bool] | None = None,
) -> Iterator[SkewTableau]:
    """LR skew tableaux of shape ``outer/inner``.

    ``weight`` fixes the content; ``max_letter`` caps the letters;
    ``allowed(letter, row)`` (1-based row) filters placements.
    Cells are filled row by row from the top, each row right to left, which is
    the order of a reading word whose lattice property is checked on the fly.
    """
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        return
    size = outer.size - inner.size
    if weight is not None:
        weight = tuple(weight)
        if sum(weight) != size:
            return
        cap = len(weight)
    else:
        cap = size
    if max_letter is not None:
        cap = min(cap, max_letter)
    order = [(r, c) for r in range(len(outer))
             for c in range(outer.part(r + 1) - 1, inner.part(r + 1) - 1, -1)]
    cells: dict[tuple[int, int], int] = {}
    counts = [0] * (cap + 2)

    def rec(k):
        if k == len(order):
            yield SkewTableau.from_cells(outer, inner, cells)
            return
        r, c = order[k]
        hi = cells.get((r, c + 1), cap)
        lo = cells[(r - 1, c)] + 1 if (r - 1, c) in cells else 1
        # letter x may only appear once x-1 is ahead of x
        hi = min(hi, cap)
        for x in range(lo, hi + 1):
            if x > 1 and counts[x] + 1 > counts[x - 1]:
                continue
            if weight is not None and counts[x] + 1 > weight[x - 1]:
                continue
            if allowed is not None and not allowed(x, r + 1):
                continue
            cells[(r, c)] = x
            counts[x] += 1
            yield from rec(k + 1)
            counts[x] -= 1
            del cells[(r, c)]

    yield from rec(0)


def lr_tableaux_companions(lam, delta, nu, m: int) -> list[Tableau]:
    """``LR_{lam,delta}^nu`` as tableaux of shape ``lam``: companions of skew ``nu/delta`` content ``lam``."""
    lam, delta, nu = Partition(lam), Partition(delta), Partition(nu)
    return [companion(s) for s in enumerate_lr_skew(nu, delta, weight=lam)]
