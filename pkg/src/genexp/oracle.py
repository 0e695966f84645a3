"""Brute-force ground truth: Weyl groups, the t-Kostant partition function and
the alternating-sum Lusztig t-analogue.

This module shares nothing with the tableau code except :class:`Poly`.
Weights live in epsilon coordinates: gl_n coordinates for type A (so the zero
weight of sl_n is the constant vector ``(a, ..., a)``) and the usual
``(x_1, ..., x_n)`` for type C.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .poly import Poly


class RootSystem:
    """Root system of type ``A`` (as gl_n, rank ``n-1``) or ``C`` (rank ``n``)."""

    def __init__(self, kind: str, n: int):
        kind = kind.upper()
        if kind not in ("A", "C"):
            raise ValueError(f"unsupported root system type {kind!r}")
        if n < 1:
            raise ValueError("rank must be positive")
        self.kind, self.n = kind, n

    def __repr__(self):
        return f"RootSystem({self.kind!r}, {self.n})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.kind, self.n) == (other.kind, other.n)

    def __hash__(self):
        return hash((self.kind, self.n))

    @property
    def rho(self) -> tuple[int, ...]:
        n = self.n
        if self.kind == "A":
            return tuple(range(n - 1, -1, -1))
        return tuple(range(n, 0, -1))

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return _positive_roots(self.kind, self.n)

    @property
    def n_simple(self) -> int:
        return self.n - 1 if self.kind == "A" else self.n

    def simple_coords(self, beta: Sequence[int]) -> tuple[int, ...] | None:
        """Coefficients of ``beta`` on the simple roots, or None off the root lattice."""
        prefix = list(itertools.accumulate(beta))
        if self.kind == "A":
            if prefix[-1] != 0:
                return None
            return tuple(prefix[:-1])
        if prefix[-1] % 2:
            return None
        return tuple(prefix[:-1]) + (prefix[-1] // 2,)

    def is_dominant(self, lam: Sequence[int]) -> bool:
        lam = list(lam)
        if any(a < b for a, b in zip(lam, lam[1:])):
            return False
        return self.kind == "A" or lam[-1] >= 0

    def pad(self, lam: Sequence[int]) -> tuple[int, ...]:
        lam = list(lam)
        if len(lam) > self.n:
            raise ValueError(f"weight {lam} has more than {self.n} coordinates")
        return tuple(lam + [0] * (self.n - len(lam)))

    def weyl_group(self) -> list["WeylElement"]:
        return list(_weyl_group(self.kind, self.n))

    def exponents_degrees(self) -> tuple[int, ...]:
        """Degrees of the basic invariants."""
        if self.kind == "A":
            return tuple(range(2, self.n + 1))
        return tuple(range(2, 2 * self.n + 1, 2))


@lru_cache(maxsize=None)
def _positive_roots(kind: str, n: int) -> tuple[tuple[int, ...], ...]:
    roots = []
    for i, j in itertools.combinations(range(n), 2):
        v = [0] * n
        v[i], v[j] = 1, -1
        roots.append(tuple(v))
        if kind == "C":
            v = [0] * n
            v[i], v[j] = 1, 1
            roots.append(tuple(v))
    if kind == "C":
        for i in range(n):
            v = [0] * n
            v[i] = 2
            roots.append(tuple(v))
    return tuple(roots)


class WeylElement(NamedTuple):
    """``w(e_i) = signs[i] * e_{perm[i]}``; type A elements have all signs ``+1``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]
    length: int

    def act(self, v: Sequence[int]) -> tuple[int, ...]:
        out = [0] * len(v)
        for i, x in enumerate(v):
            out[self.perm[i]] = self.signs[i] * x
        return tuple(out)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def determinant(self) -> int:
        """Sign of the permutation times the product of the signs."""
        inv = sum(1 for a, b in itertools.combinations(self.perm, 2) if a > b)
        s = -1 if inv % 2 else 1
        for x in self.signs:
            s *= x
        return s


def _is_positive(kind: str, n: int, v: Sequence[int]) -> bool:
    # the first nonzero epsilon coordinate decides for both A and C
    for x in v:
        if x:
            return x > 0
    return False


@lru_cache(maxsize=None)
def _weyl_group(kind: str, n: int) -> tuple[WeylElement, ...]:
    roots = _positive_roots(kind, n)
    sign_choices = [(1,) * n] if kind == "A" else list(itertools.product((1, -1), repeat=n))
    out = []
    for perm in itertools.permutations(range(n)):
        for signs in sign_choices:
            w = WeylElement(perm, signs, 0)
            length = sum(1 for r in roots if not _is_positive(kind, n, w.act(r)))
            out.append(WeylElement(perm, signs, length))
    return tuple(out)


def poincare_polynomial(rs: RootSystem) -> Poly:
    """``sum_w t^{l(w)}``."""
    counts: dict[int, int] = {}
    for w in rs.weyl_group():
        counts[w.length] = counts.get(w.length, 0) + 1
    return Poly.from_coeffs(counts)


# t-Kostant partition function


def _roots_in_simple_coords(rs: RootSystem) -> list[tuple[int, ...]]:
    return [rs.simple_coords(r) for r in rs.positive_roots]


def _partition_table(rs: RootSystem, box: tuple[int, ...]) -> dict[tuple[int, ...], list[int]]:
    """Unbounded knapsack over positive roots; values are coefficient lists in ``t``."""
    points = list(itertools.product(*(range(b + 1) for b in box)))
    table: dict[tuple[int, ...], list[int]] = {p: [] for p in points}
    table[tuple(0 for _ in box)] = [1]
    for r in _roots_in_simple_coords(rs):
        if any(x > b for x, b in zip(r, box)):
            continue
        for p in points:  # lexicographic, so p - r is already updated
            q = tuple(a - b for a, b in zip(p, r))
            if min(q, default=0) < 0:
                continue
            src = table[q]
            if not src:
                continue
            dst = table[p]
            if len(dst) < len(src) + 1:
                dst.extend([0] * (len(src) + 1 - len(dst)))
            for d, c in enumerate(src):
                if c:
                    dst[d + 1] += c
    return table


def _as_poly(coeffs: list[int]) -> Poly:
    return Poly.from_coeffs({d: c for d, c in enumerate(coeffs) if c})


def t_kostant_partition(rs: RootSystem, beta: Sequence[int]) -> Poly:
    """``P_t(beta)``: decompositions of ``beta`` into positive roots, weighted by ``t^{#roots}``."""
    beta = rs.pad(beta)
    c = rs.simple_coords(beta)
    if c is None or any(x < 0 for x in c):
        return Poly()
    return _as_poly(_partition_table(rs, c)[c])


def lusztig_t_analogue(rs: RootSystem, lam: Sequence[int], mu: Sequence[int] | None = None) -> Poly:
    """``sum_w (-1)^{l(w)} P_t(w(lam+rho) - (mu+rho))``.

    ``mu`` defaults to the zero weight: ``(|lam|/n, ..., |lam|/n)`` in type A
    (zero polynomial when ``n`` does not divide ``|lam|``), ``0`` in type C.
    """
    lam = rs.pad(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant for {rs}")
    if mu is None:
        if rs.kind == "A":
            if sum(lam) % rs.n:
                return Poly()
            mu = (sum(lam) // rs.n,) * rs.n
        else:
            mu = (0,) * rs.n
    mu = rs.pad(mu)
    if not rs.is_dominant(mu):
        raise ValueError(f"{mu} is not dominant for {rs}")
    rho = rs.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    mr = tuple(a + b for a, b in zip(mu, rho))
    if rs.simple_coords(tuple(a - b for a, b in zip(lam, mu))) is None:
        return Poly()
    terms = []
    for w in rs.weyl_group():
        c = rs.simple_coords(tuple(a - b for a, b in zip(w.act(lr), mr)))
        if c is not None and all(x >= 0 for x in c):
            terms.append((w.sign, c))
    if not terms:
        return Poly()
    box = tuple(max(c[k] for _, c in terms) for k in range(rs.n_simple))
    table = _partition_table(rs, box)
    total: list[int] = []
    for sign, c in terms:
        src = table[c]
        if len(total) < len(src):
            total.extend([0] * (len(src) - len(total)))
        for d, x in enumerate(src):
            total[d] += sign * x
    out = _as_poly(total)
    if not out.is_nonnegative():
        raise RuntimeError(f"negative coefficient in K_{{{lam},{mu}}}: {out}")
    return out


def generalized_exponents_oracle(kind: str, lam: Sequence[int], n: int) -> Poly:
    """Zero-weight t-analogue: type ``A`` means gl_n, type ``C`` means sp_2n."""
    return lusztig_t_analogue(RootSystem(kind, n), lam)


def weyl_group_size(rs: RootSystem) -> int:
    return len(rs.weyl_group())


def iter_weyl(rs: RootSystem) -> Iterator[WeylElement]:
    yield from rs.weyl_group()
