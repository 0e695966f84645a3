"""Type A_{m-1} crystal structure on semistandard tableaux.

Conventions (used everywhere in the package):

* The word of a tableau is its Japanese (column) reading: columns from right
  to left, each column from top to bottom.
* A tensor product ``b1 (x) b2`` is realized by concatenating the words of
  ``b1`` and ``b2`` (Kashiwara's convention), so ``H_delta (x) T`` is highest
  weight iff ``eps(T) <= delta``.
* For the index ``i`` a letter ``i`` is bracketed with a letter ``i+1``
  occurring to its right.  ``e_i`` changes the rightmost unbracketed ``i+1``
  into ``i``; ``f_i`` changes the leftmost unbracketed ``i`` into ``i+1``.
  Hence a word is highest weight iff every left factor is a lattice word.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

from .partitions import Partition, conjugate


class Tableau(tuple):
    """Semistandard tableau stored row-major as a tuple of row tuples."""

    def __new__(cls, rows: Iterable[Iterable[int]] = (), check: bool = True):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        rows = tuple(r for r in rows if r)
        self = super().__new__(cls, rows)
        if check and not self.is_semistandard():
            raise ValueError(f"not a semistandard tableau: {rows}")
        return self

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        """Parse ``"1,1,3,4/2,3,4/3"``; a trailing ``'`` marks a barred letter ``k' -> 2k``."""
        text = text.strip()
        if not text:
            return cls()
        rows = []
        for row in text.split("/"):
            entries = []
            for x in row.split(","):
                x = x.strip()
                if x.endswith("'"):
                    entries.append(2 * int(x[:-1]))
                elif x.startswith("b"):
                    entries.append(2 * int(x[1:]))
                else:
                    entries.append(int(x))
            rows.append(entries)
        return cls(rows)

    def __str__(self):
        return "/".join(",".join(map(str, r)) for r in self)

    def __repr__(self):
        return f"Tableau({str(self)!r})"

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self)

    def size(self) -> int:
        return sum(len(r) for r in self)

    def max_entry(self) -> int:
        return max((x for r in self for x in r), default=0)

    def columns(self) -> list[tuple[int, ...]]:
        cols = []
        for c in range(len(self[0]) if self else 0):
            cols.append(tuple(r[c] for r in self if len(r) > c))
        return cols

    def transpose(self) -> "Tableau":
        return Tableau(self.columns(), check=False)

    def content(self, m: int | None = None) -> tuple[int, ...]:
        """Number of entries equal to ``1, 2, ..., m``."""
        if m is None:
            m = self.max_entry()
        counts = [0] * (m + 1)
        for r in self:
            for x in r:
                counts[x] += 1
        return tuple(counts[1:])

    def is_semistandard(self) -> bool:
        for r in self:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(self, self[1:]):
            if len(lower) > len(upper):
                return False
            if any(a >= b for a, b in zip(upper, lower)):
                return False
        return all(x >= 1 for r in self for x in r)


class EpsPhiProfile(NamedTuple):
    """``eps[i-1] = eps_i`` and ``phi[i-1] = phi_i`` for ``i = 1..m-1``."""

    eps: tuple[int, ...]
    phi: tuple[int, ...]

    def eps_i(self, i: int) -> int:
        return self.eps[i - 1] if 1 <= i <= len(self.eps) else 0

    def phi_i(self, i: int) -> int:
        return self.phi[i - 1] if 1 <= i <= len(self.phi) else 0

    def eps_coords(self) -> dict[int, int]:
        return {i + 1: a for i, a in enumerate(self.eps) if a}

    def phi_coords(self) -> dict[int, int]:
        return {i + 1: a for i, a in enumerate(self.phi) if a}


# words and positions


@lru_cache(maxsize=None)
def reading_positions(shape: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Cells of ``shape`` in Japanese reading order."""
    cols = conjugate(shape)
    return tuple((r, c) for c in range(len(cols) - 1, -1, -1) for r in range(cols[c]))


def reading_word(T: Sequence[Sequence[int]]) -> tuple[int, ...]:
    shape = tuple(len(r) for r in T)
    return tuple(T[r][c] for r, c in reading_positions(shape))


def _from_word(shape: tuple[int, ...], word: Sequence[int]) -> Tableau:
    rows = [[0] * p for p in shape]
    for (r, c), x in zip(reading_positions(shape), word):
        rows[r][c] = x
    return Tableau(rows, check=False)


def word_eps_phi(word: Sequence[int], m: int) -> EpsPhiProfile:
    """All ``eps_i, phi_i`` (``1 <= i < m``) of a word in one pass."""
    plus = [0] * (m + 2)
    minus = [0] * (m + 2)
    for x in word:
        # x closes a pending x-1 (index x-1) and opens a new x (index x)
        if plus[x - 1]:
            plus[x - 1] -= 1
        else:
            minus[x - 1] += 1
        plus[x] += 1
    return EpsPhiProfile(tuple(minus[1:m]), tuple(plus[1:m]))


def word_eps_phi_infinite(word: Sequence[int]) -> EpsPhiProfile:
    """Statistics in the crystal on the infinite alphabet (indices up to the largest letter)."""
    top = max(word, default=1)
    return word_eps_phi(word, top + 1)


def _unbracketed(word: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions of unbracketed ``i+1`` (minus) and ``i`` (plus) letters."""
    minus: list[int] = []
    plus: list[int] = []
    for pos, x in enumerate(word):
        if x == i:
            plus.append(pos)
        elif x == i + 1:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
    return minus, plus


def word_e(word: Sequence[int], i: int) -> tuple[int, ...] | None:
    minus, _ = _unbracketed(word, i)
    if not minus:
        return None
    w = list(word)
    w[minus[-1]] = i
    return tuple(w)


def word_f(word: Sequence[int], i: int) -> tuple[int, ...] | None:
    _, plus = _unbracketed(word, i)
    if not plus:
        return None
    w = list(word)
    w[plus[0]] = i + 1
    return tuple(w)


# crystal elements: a Tableau, or a tuple of Tableaux for a tensor product


def _is_tensor(b) -> bool:
    return not isinstance(b, Tableau)


def element_word(b) -> tuple[int, ...]:
    if _is_tensor(b):
        return tuple(x for factor in b for x in reading_word(factor))
    return reading_word(b)


def _rebuild(b, word):
    if _is_tensor(b):
        out, k = [], 0
        for factor in b:
            n = factor.size()
            out.append(_from_word(tuple(len(r) for r in factor), word[k:k + n]))
            k += n
        return tuple(out)
    return _from_word(tuple(len(r) for r in b), word)


def _check_index(i: int, m: int):
    if not 1 <= i <= m - 1:
        raise IndexError(f"crystal index {i} out of range 1..{m - 1}")


def crystal_e(b, i: int, m: int):
    """Raising operator ``e_i`` on a tableau (or tensor tuple); ``None`` when ``eps_i = 0``."""
    _check_index(i, m)
    w = word_e(element_word(b), i)
    return None if w is None else _rebuild(b, w)


def crystal_f(b, i: int, m: int):
    """Lowering operator ``f_i``; ``None`` when ``phi_i = 0``."""
    _check_index(i, m)
    w = word_f(element_word(b), i)
    return None if w is None else _rebuild(b, w)


def eps_phi(b, m: int) -> EpsPhiProfile:
    return word_eps_phi(element_word(b), m)


def weight(b, m: int) -> tuple[int, ...]:
    counts = [0] * (m + 1)
    for x in element_word(b):
        counts[x] += 1
    return tuple(counts[1:])


def tensor_eps_phi(b1, b2, i: int, m: int) -> tuple[int, int]:
    """``(eps_i, phi_i)`` of ``b1 (x) b2`` from the tensor product rule."""
    p1, p2 = eps_phi(b1, m), eps_phi(b2, m)
    e1, f1 = p1.eps_i(i), p1.phi_i(i)
    e2, f2 = p2.eps_i(i), p2.phi_i(i)
    wt1 = f1 - e1
    wt2 = f2 - e2
    eps = max(e1, e2 - wt1)
    phi = max(f2, f1 + wt2)
    return eps, phi


# special tableaux


def yamanouchi(shape: Iterable[int]) -> Tableau:
    """Highest weight tableau ``H_shape``: row ``k`` filled with ``k``."""
    return Tableau(((k + 1,) * p for k, p in enumerate(Partition(shape))), check=False)


def lowest_tableau(shape: Iterable[int], m: int) -> Tableau:
    """Lowest weight element of ``B_m(shape)``: each column of height ``h`` is ``m-h+1..m``."""
    shape = Partition(shape)
    if len(shape) > m:
        raise ValueError(f"shape {shape} has more than {m} rows")
    cols = conjugate(shape)
    rows = [[m - cols[c] + 1 + r for c in range(p)] for r, p in enumerate(shape)]
    return Tableau(rows, check=False)


def column(*entries: int) -> Tableau:
    return Tableau([(x,) for x in entries])


# enumeration


def enumerate_ssyt(shape: Iterable[int], m: int,
                   row_ok: Callable[[int, tuple[int, ...]], bool] | None = None) -> Iterator[Tableau]:
    """All SSYT of ``shape`` with entries in ``1..m``, in row-word lexicographic order.

    ``row_ok(r, row)`` (0-based ``r``) may reject a completed row, pruning every
    tableau that extends it.
    """
    shape = Partition(shape)
    if len(shape) > m:
        raise ValueError(f"shape {shape} is too tall for an alphabet of size {m}")
    if not shape:
        yield Tableau()
        return
    cols = conjugate(shape)
    # entry at (r, c) must leave room for the cells below it
    caps = [[m - (cols[c] - 1 - r) for c in range(p)] for r, p in enumerate(shape)]

    def fill_row(r, prev_row):
        p = shape[r]
        row = [0] * p

        def rec(c, low):
            if c == p:
                yield tuple(row)
                return
            lo = low
            if prev_row is not None and prev_row[c] + 1 > lo:
                lo = prev_row[c] + 1
            for x in range(lo, caps[r][c] + 1):
                row[c] = x
                yield from rec(c + 1, x)

        yield from rec(0, 1)

    def rec_rows(r, acc):
        if r == len(shape):
            yield Tableau(acc, check=False)
            return
        for row in fill_row(r, acc[-1] if acc else None):
            if row_ok is not None and not row_ok(r, row):
                continue
            acc.append(row)
            yield from rec_rows(r + 1, acc)
            acc.pop()

    yield from rec_rows(0, [])


def enumerate_ssyt_content(shape: Iterable[int], content: Sequence[int],
                           rows_for: Callable[[int], int] | None = None) -> Iterator[Tableau]:
    """SSYT of ``shape`` with exactly ``content[k-1]`` entries equal to ``k``.

    ``rows_for(k)`` optionally caps the number of top rows letter ``k`` may
    occupy; it must be nondecreasing in ``k``.
    """
    shape = Partition(shape)
    m = len(content)
    if sum(content) != shape.size:
        return
    if len(shape) > m:
        return
    # fill letter by letter: the cells holding letters <= k form a partition,
    # and the letter-k cells form a horizontal strip
    memo: dict = {}

    def strips(inner, k_count):
        key = (inner, k_count)
        if key not in memo:
            memo[key] = _strips(inner, k_count)
        return memo[key]

    def _strips(inner, k_count):
        # horizontal strips of size k_count added to inner, staying inside shape
        inner = list(inner) + [0] * (len(shape) - len(inner))
        res = []

        def rec(r, left, acc):
            if r == len(shape):
                if left == 0:
                    res.append(tuple(acc))
                return
            cap = shape[r] if r == 0 else min(shape[r], inner[r - 1])
            room = cap - inner[r]
            for add in range(min(room, left), -1, -1):
                acc.append(inner[r] + add)
                rec(r + 1, left - add, acc)
                acc.pop()

        rec(0, k_count, [])
        return res

    def rec(k, inner, layers):
        if k == m:
            if tuple(x for x in inner if x) == tuple(shape):
                rows = [[0] * p for p in shape]
                for letter, (a, b) in enumerate(layers, start=1):
                    for r in range(len(shape)):
                        for c in range(a[r] if r < len(a) else 0, b[r]):
                            rows[r][c] = letter
                yield Tableau(rows, check=False)
            return
        limit = k + 1 if rows_for is None else min(k + 1, rows_for(k + 1))
        for nxt in strips(inner, content[k]):
            # a strip for letter k+1 may only use rows 0..k
            if any(nxt[r] for r in range(limit, len(shape))):
                continue
            padded = tuple(inner) + (0,) * (len(shape) - len(inner))
            yield from rec(k + 1, nxt, layers + [(padded, nxt)])

    yield from rec(0, (0,) * len(shape), [])


# highest weight paths and the Lusztig involution


def to_highest_weight(b, m: int) -> tuple[list[int], object]:
    """Raise greedily (smallest applicable index first).

    Returns ``(path, h)`` with ``h = e_{path[-1]} ... e_{path[0]} b``; replaying
    ``f_{path[k]}`` for ``k`` from last to first recovers ``b``.
    """
    path: list[int] = []
    w = element_word(b)
    while True:
        for i in range(1, m):
            nw = word_e(w, i)
            if nw is not None:
                path.append(i)
                w = nw
                break
        else:
            return path, _rebuild(b, w)


def to_lowest_weight(b, m: int) -> tuple[list[int], object]:
    """Lower greedily; returns ``(path, l)`` with ``l = f_{path[-1]} ... f_{path[0]} b``."""
    path: list[int] = []
    w = element_word(b)
    while True:
        for i in range(1, m):
            nw = word_f(w, i)
            if nw is not None:
                path.append(i)
                w = nw
                break
        else:
            return path, _rebuild(b, w)


def replay(b, ops: Iterable[tuple[str, int]], m: int):
    """Apply ``[("e"|"f", i), ...]`` in order; raises if an operator kills the element."""
    w = element_word(b)
    for kind, i in ops:
        _check_index(i, m)
        nw = word_e(w, i) if kind == "e" else word_f(w, i)
        if nw is None:
            raise ValueError(f"{kind}_{i} is not defined on {_rebuild(b, w)}")
        w = nw
    return _rebuild(b, w)


def lusztig_involution(T: Tableau, m: int) -> Tableau:
    """Lusztig involution ``S`` on ``B_m(shape)``: ``e_i S = S f_{m-i}``.

    Raise ``T`` to ``H`` along ``path``; then ``S(T)`` is obtained from the
    lowest weight tableau by the raising operators ``e_{m-i}`` replayed in
    reverse order.
    """
    if T and T.max_entry() > m:
        raise ValueError(f"entries of {T} exceed alphabet size {m}")
    path, _ = to_highest_weight(T, m)
    low = lowest_tableau(T.shape, m)
    return replay(low, [("e", m - i) for i in reversed(path)], m)


def tensor_lusztig_involution(b: tuple, m: int) -> tuple:
    """Lusztig involution on the connected component of a tensor element.

    Experimental on non-highest elements: computed by the same raise/replay
    scheme, starting from the lowest weight element of the component.
    """
    path, h = to_highest_weight(b, m)
    _, low = to_lowest_weight(h, m)
    return replay(low, [("e", m - i) for i in reversed(path)], m)


def lr_membership(T: Tableau, delta: Iterable[int], m: int) -> bool:
    """Whether ``H_delta (x) T`` is highest weight, i.e. ``eps_i(T) <= delta_i - delta_{i+1}``."""
    delta = Partition(delta)
    if len(delta) > m:
        raise ValueError(f"delta {delta} has more than {m} parts")
    prof = eps_phi(T, m)
    return all(prof.eps[i - 1] <= delta.part(i) - delta.part(i + 1) for i in range(1, m))


def is_highest_weight(b, m: int) -> bool:
    return not any(eps_phi(b, m).eps)
