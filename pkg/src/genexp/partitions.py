"""Partitions, fundamental-weight coordinates and the domino families.

A partition is stored dense as a weakly decreasing tuple of positive parts.
Its fundamental-weight coordinates are stored sparse: ``{i: a_i}`` where
``a_i`` is the number of columns of height ``i``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, NamedTuple


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros are stripped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be non-negative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return ",".join(map(str, self))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the canonical text form ``"7,6,5,3,1"`` (empty string is the empty partition)."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        try:
            return cls(int(x) for x in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}: {exc}") from None

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part with implicit trailing zeros."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, p in enumerate(self):
            for c in range(p):
                yield r, c

    def contains(self, other: Iterable[int]) -> bool:
        other = tuple(other)
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def __add__(self, other):
        # Partition addition is rowwise, matching addition of weight vectors.
        n = max(len(self), len(other))
        return Partition(self.part(i) + (other[i - 1] if i <= len(other) else 0)
                         for i in range(1, n + 1))


def conjugate(p: Iterable[int]) -> Partition:
    p = tuple(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x > c) for c in range(p[0]))


def fundamental_coords(p: Iterable[int]) -> dict[int, int]:
    """Return ``{i: number of columns of height i}`` (zero entries omitted)."""
    p = Partition(p)
    coords: dict[int, int] = {}
    for h in conjugate(p):
        coords[h] = coords.get(h, 0) + 1
    return coords


def from_fundamental_coords(coords: Mapping[int, int]) -> Partition:
    """Inverse of :func:`fundamental_coords`: ``sum a_i omega_i`` as a partition."""
    if any(a < 0 for a in coords.values()):
        raise ValueError(f"not a dominant weight: {dict(coords)}")
    heights = [h for h in sorted(coords, reverse=True) for _ in range(coords[h]) if h > 0]
    return conjugate(heights)


def weight_rank(coords: Mapping[int, int]) -> int:
    """Number of boxes of ``sum a_i omega_i``, i.e. ``sum i*a_i``."""
    return sum(i * a for i, a in coords.items())


def add_coords(*vs: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for v in vs:
        for i, a in v.items():
            out[i] = out.get(i, 0) + a
    return {i: a for i, a in out.items() if a}


def sub_coords(u: Mapping[int, int], v: Mapping[int, int]) -> dict[int, int]:
    return add_coords(u, {i: -a for i, a in v.items()})


class Classification(NamedTuple):
    in_P2: bool
    in_P11: bool
    in_boxplus: bool


def classify(p: Iterable[int]) -> Classification:
    """Membership in P^(2) (horizontal dominoes), P^(1,1) (vertical) and their intersection."""
    coords = fundamental_coords(p)
    p2 = all(a % 2 == 0 for a in coords.values())
    p11 = all(i % 2 == 0 for i in coords)
    return Classification(p2, p11, p2 and p11)


def in_P2(p) -> bool:
    return classify(p).in_P2


def in_P11(p) -> bool:
    return classify(p).in_P11


def decompose_boxplus(p: Iterable[int]) -> tuple[Partition, Partition]:
    """Split ``p`` into its largest P^boxplus part and the remainder (both partitions)."""
    coords = fundamental_coords(p)
    lower = {i: a - a % 2 for i, a in coords.items() if i % 2 == 0 and a >= 2}
    upper = sub_coords(coords, lower)
    return from_fundamental_coords(lower), from_fundamental_coords(upper)


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for parts in rec(n, max_part, max_len):
        yield Partition(parts)


def partitions_up_to(n: int, max_len: int | None = None) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k, max_len=max_len)


def partitions_contained(outer: Iterable[int]) -> Iterator[Partition]:
    """All partitions whose diagram fits inside ``outer``."""
    outer = tuple(outer)

    def rec(i, cap):
        if i == len(outer):
            yield ()
            return
        yield ()
        for x in range(min(cap, outer[i]), 0, -1):
            for tail in rec(i + 1, x):
                yield (x,) + tail

    seen = set()
    for parts in rec(0, outer[0] if outer else 0):
        if parts not in seen:
            seen.add(parts)
            yield Partition(parts)


def p11_partitions(size: int, max_len: int) -> Iterator[Partition]:
    """Partitions of ``size`` in P^(1,1) with at most ``max_len`` rows (rows come in equal pairs)."""
    if size % 2:
        return
    for half in partitions_of(size // 2, max_len=max_len // 2):
        yield Partition(x for x in half for _ in range(2))


def p2_partitions(size: int, max_len: int) -> Iterator[Partition]:
    """Partitions of ``size`` in P^(2) with at most ``max_len`` rows (all parts even)."""
    if size % 2:
        return
    for half in partitions_of(size // 2, max_len=max_len):
        yield Partition(2 * x for x in half)
