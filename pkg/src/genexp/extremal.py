"""Smallest and largest powers of ``t`` in ``K^{C_n}_{lam,0}(t)``.

Notation: ``lam = sum_i a_i omega_{n+1-i}``, so ``a_i`` counts the columns of
height ``n+1-i`` and column blocks run left to right with ``i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .crystal import Tableau
from .exponents import charge_C, genexp_C, is_distinguished_star, max_degree_C
from .partitions import Partition


def _need_even(lam: Partition, n: int):
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    if lam.size % 2:
        raise ValueError(f"|lambda| = {lam.size} is odd: there is no zero weight space")


@dataclass
class BlockStructure:
    n: int
    a: list
    s: list
    b: list
    c: list
    odd_indices: list
    blocks: list = field(default_factory=list)       # (k, k', odd?)
    incomplete: int | None = None                      # k_p when p is odd
    column_heights: list = field(default_factory=list)
    special: list = field(default_factory=list)        # 0-based column positions
    odd_special: list = field(default_factory=list)

    @property
    def S(self) -> int:
        return self.s[-1] if self.s else 0

    @property
    def p(self) -> int:
        return len(self.odd_indices)

    @property
    def exceptional(self) -> bool:
        """``p`` odd and ``n+1-k_p`` odd."""
        return self.p % 2 == 1 and (self.n + 1 - self.odd_indices[-1]) % 2 == 1

    def sigma_row(self) -> tuple[int, ...]:
        return tuple(self.n + i for i in range(1, self.n + 1) for _ in range(self.c[i - 1]))

    def block_of(self, i: int):
        for k, k2, odd in self.blocks:
            if k <= i <= k2:
                return (k, k2, odd)
        if self.incomplete is not None and i >= self.incomplete:
            return (self.incomplete, self.n, None)
        return None


def block_structure(lam: Iterable[int], n: int) -> BlockStructure:
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    heights = [sum(1 for x in lam if x > c) for c in range(lam.part(1))]
    a = [heights.count(n + 1 - i) for i in range(1, n + 1)]
    s, run = [], 0
    for x in a:
        run += x
        s.append(run)
    b = []
    for x, si in zip(a, s):
        if x % 2 == 0:
            b.append(x)
        else:
            b.append(x + 1 if si % 2 else x - 1)
    odd = [i for i in range(1, n + 1) if a[i - 1] % 2]
    c = list(b)
    if odd and s[odd[-1] - 1] % 2:
        c[odd[-1] - 1] = a[odd[-1] - 1]
    bs = BlockStructure(n, a, s, b, c, odd, column_heights=heights)
    for j in range(0, len(odd) - 1, 2):
        k, k2 = odd[j], odd[j + 1]
        bs.blocks.append((k, k2, (k2 - k) % 2 == 1))
    if len(odd) % 2:
        bs.incomplete = odd[-1]
    starts = []
    for k, k2, _ in bs.blocks:
        starts.append((k, k2))
    if bs.incomplete is not None:
        starts.append((bs.incomplete, n))
    for k, k2 in starts:
        for i in range(k + 1, k2 + 1):
            if a[i - 1]:
                bs.special.append(s[i - 2])  # first column of the subblock of height n+1-i
    bs.special.sort()
    row = bs.sigma_row()
    for col in bs.special:
        if row[col] % 2 == heights[col] % 2:
            bs.odd_special.append(col)
    return bs


def special_by_top_entry(lam: Iterable[int], n: int) -> list[int]:
    """Columns whose top entry in ``sigma_min^row`` is below the maximum ``n+i`` for height ``n+1-i``."""
    bs = block_structure(lam, n)
    row = bs.sigma_row()
    return [col for col, h in enumerate(bs.column_heights) if row[col] < 2 * n + 1 - h]


# closed formulas


def min_power(lam: Iterable[int], n: int) -> int:
    """Smallest power of ``t``, from both closed forms (asserted equal)."""
    lam = Partition(lam)
    _need_even(lam, n)
    bs = block_structure(lam, n)
    twice = sum((n + 1 - i) * bs.b[i - 1] for i in range(1, n + 1))
    alt = lam.size + sum((-1) ** (bs.s[i - 1] - 1) * (n + 1 - i) for i in bs.odd_indices)
    if twice != alt or twice % 2:
        raise ArithmeticError(f"closed forms disagree for {lam}, n={n}: {twice}/2 vs {alt}/2")
    return twice // 2


def max_power(lam: Iterable[int], n: int) -> int:
    """``<lam, rho^vee> = sum_i lam_i (2n-2i+1)/2``."""
    lam = Partition(lam)
    _need_even(lam, n)
    return max_degree_C(lam, n)


def extremal_coefficients(lam: Iterable[int], n: int) -> dict:
    """Extremal exponents with the coefficients observed in the full polynomial."""
    K = genexp_C(lam, n)
    lo, hi = min_power(lam, n), max_power(lam, n)
    return {"min_power": lo, "min_coeff": K.coeff(lo), "max_power": hi, "max_coeff": K.coeff(hi)}


# the minimizing filling


def _fill_odd_special(top: int, height: int, forced: int | None, m: int) -> list[int]:
    col = list(range(top, top + height))
    if forced is None or forced in col:
        return col
    avoid = forced - 1
    if avoid in col:
        k = col.index(avoid)
        col = col[:k] + [x + 1 for x in col[k:]]
    elif col[-1] < avoid:
        col[-1] = forced
    if col[-1] > m or forced not in col:
        raise ArithmeticError(f"cannot fill a column of height {height} from {top} containing {forced}")
    return col


def sigma_min(lam: Iterable[int], n: int) -> Tableau:
    """The minimizing filling: first row ``sigma_min^row``; odd special columns adjusted right to left."""
    lam = Partition(lam)
    _need_even(lam, n)
    if not lam:
        return Tableau()
    bs = block_structure(lam, n)
    row = bs.sigma_row()
    cols: list[list[int]] = []
    for col, h in enumerate(bs.column_heights):
        cols.append(list(range(row[col], row[col] + h)))
    forced = None
    if bs.exceptional:
        forced = n + bs.odd_indices[-1]
    for col in sorted(bs.odd_special, reverse=True):
        cols[col] = _fill_odd_special(row[col], bs.column_heights[col], forced, 2 * n)
        last = cols[col][-1]
        forced = last + 1 if last % 2 else None
    rows = [[cols[c][r] for c in range(len(cols)) if bs.column_heights[c] > r]
            for r in range(len(lam))]
    return Tableau(rows)


# brute force over first rows and the lattice path moves


def row_charge(sigma: Iterable[int], n: int) -> int:
    """``sum_{i=1}^{2n} (2n+1-i) ceil(m_i/2)``; the ``i = 1`` term is the charge of the leading ones."""
    mult: dict[int, int] = {}
    for x in sigma:
        mult[x] = mult.get(x, 0) + 1
    return sum((2 * n + 1 - i) * ((m + 1) // 2) for i, m in mult.items())


def row_bounds(lam: Iterable[int], n: int) -> list[int]:
    """Upper bound ``n+k`` on ``sigma_j`` for ``s_{k-1} < j <= s_k``."""
    bs = block_structure(lam, n)
    return [n + i for i in range(1, n + 1) for _ in range(bs.a[i - 1])]


def in_sigma_set(sigma, bounds) -> bool:
    return (len(sigma) == len(bounds) and all(x >= 1 for x in sigma)
            and all(x <= y for x, y in zip(sigma, sigma[1:]))
            and all(x <= b for x, b in zip(sigma, bounds)))


def iter_sigma_set(lam: Iterable[int], n: int) -> Iterator[tuple[int, ...]]:
    bounds = row_bounds(lam, n)

    def rec(j, low, acc):
        if j == len(bounds):
            yield tuple(acc)
            return
        for x in range(low, bounds[j] + 1):
            acc.append(x)
            yield from rec(j + 1, x, acc)
            acc.pop()

    yield from rec(0, 1, [])


def min_row_charge_bruteforce(lam: Iterable[int], n: int) -> int:
    lam = Partition(lam)
    _need_even(lam, n)
    return min(row_charge(s, n) for s in iter_sigma_set(lam, n))


def _from_mult(mult: dict[int, int]) -> tuple[int, ...]:
    return tuple(x for x in sorted(mult) for _ in range(mult[x]))


def legal_moves(sigma, n: int, bounds) -> Iterator[tuple[int, tuple[int, ...]]]:
    """``(move number, sigma')`` for every legal application of moves (1)-(4)."""
    mult: dict[int, int] = {}
    for x in sigma:
        mult[x] = mult.get(x, 0) + 1
    present = sorted(mult)

    def emit(kind, changes):
        new = dict(mult)
        for v, d in changes:
            new[v] = new.get(v, 0) + d
        new = {v: k for v, k in new.items() if k}
        out = _from_mult(new)
        if in_sigma_set(out, bounds):
            yield kind, out

    for i in present:
        m = mult[i]
        if i < 2 * n and m >= 2:
            yield from emit(1, [(i, -2), (i + 1, 2)])
        if i < 2 * n and m % 2 == 1:
            yield from emit(2, [(i, -1), (i + 1, 1)])
    for i, j in zip(present, present[1:]):
        if mult[i] % 2 == 1:
            yield from emit(3, [(i, 1), (j, -1)])
        if mult[i] % 2 == 0 and mult[j] % 2 == 1:
            yield from emit(4, [(i, -1), (j, 1)])


@dataclass
class MoveReport:
    ok: bool
    reached_target: bool
    visited: int
    violations: list


def lattice_moves_check(sigma, lam: Iterable[int], n: int, limit: int = 200000) -> MoveReport:
    """Explore every legal move from ``sigma``; each must not raise the charge (move (4): keep it)."""
    lam = Partition(lam)
    bounds = row_bounds(lam, n)
    sigma = tuple(sigma)
    if not in_sigma_set(sigma, bounds):
        raise ValueError(f"{sigma} violates the first-row bounds {bounds}")
    target = block_structure(lam, n).sigma_row()
    seen = {sigma}
    queue = deque([sigma])
    violations = []
    while queue and len(seen) <= limit:
        cur = queue.popleft()
        ch = row_charge(cur, n)
        for kind, nxt in legal_moves(cur, n, bounds):
            ch2 = row_charge(nxt, n)
            if ch2 > ch or (kind == 4 and ch2 != ch):
                violations.append((cur, kind, nxt, ch, ch2))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return MoveReport(not violations, target in seen, len(seen), violations)


def check_sigma_min(lam: Iterable[int], n: int) -> bool:
    """``sigma_min`` is flagged distinguished, has first row ``sigma_min^row`` and minimal charge."""
    T = sigma_min(lam, n)
    bs = block_structure(lam, n)
    return (is_distinguished_star(T, n, flag=True)
            and (not T or tuple(T[0]) == bs.sigma_row())
            and charge_C(T, n) == min_power(lam, n))
