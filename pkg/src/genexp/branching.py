"""Symplectic branching coefficients ``c_nu^lam(sp_2n)``.

Three independent counts are kept side by side:

* Sundaram-LR tableaux: LR tableaux of shape ``nu/lam`` with weight in
  ``P^(1,1)_2n`` where each odd letter ``2i+1`` stays in rows ``1..n+i``;
* Kwon's flagged LR tableaux of shape ``lam'``;
* LR tableaux ``b`` of shape ``lam`` whose evacuation satisfies the flag (C3).

Row bound reading: "no lower than row n+i" is taken as row index ``<= n+i``.
This is the reading under which, in the three-tableau comparison for
``lam=(2,1,1)``, ``nu=(5,4,3,3,3,2)``, ``n=3``, only the first tableau is
admissible (the second has a 1 in row 4, the third a 3 in row 5).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .crystal import Tableau, enumerate_ssyt_content, lr_membership, lusztig_involution
from .exponents import satisfies_flag
from .lrmaps import (
    SkewTableau,
    companion,
    enumerate_lr_skew,
    r_matrix_highest,
    reverse_padded,
)
from .partitions import Partition, conjugate, in_P11, p11_partitions

SUNDARAM_ROW_BOUND = "odd letter 2i+1 only in rows 1..n+i (row 1 on top)"


class BranchingMismatch(ArithmeticError):
    """Two branching rules disagreed; never expected, always surfaced."""


def _check(lam: Partition, nu: Partition, n: int):
    if len(lam) > n:
        raise ValueError(f"lambda={lam} has more than {n} parts")
    if len(nu) > 2 * n:
        raise ValueError(f"nu={nu} has more than {2 * n} parts")


def lr_coefficient(lam, delta, nu, method: str = "crystal") -> int:
    """``c_{lam,delta}^nu``.

    ``"crystal"`` counts ``T`` of shape ``lam`` with ``H_delta (x) T`` highest of
    weight ``nu``; ``"skew"`` counts LR skew tableaux of shape ``nu/delta`` and
    weight ``lam``.
    """
    lam, delta, nu = Partition(lam), Partition(delta), Partition(nu)
    if lam.size + delta.size != nu.size or not nu.contains(delta) or not nu.contains(lam):
        return 0
    if method == "skew":
        return sum(1 for _ in enumerate_lr_skew(nu, delta, weight=lam))
    if method != "crystal":
        raise ValueError(f"unknown method {method!r}")
    return len(lr_tableaux(lam, delta, nu))


def lr_tableaux(lam, delta, nu, m: int | None = None) -> list[Tableau]:
    """``LR_{lam,delta}^nu``: tableaux ``T`` of shape ``lam`` with content ``nu - delta`` and ``eps(T) <= delta``."""
    lam, delta, nu = Partition(lam), Partition(delta), Partition(nu)
    if m is None:
        m = max(len(nu), len(lam), len(delta), 1)
    if not nu.contains(delta) or len(nu) > m:
        return []
    content = tuple(nu.part(i) - delta.part(i) for i in range(1, m + 1))
    return [T for T in enumerate_ssyt_content(lam, content) if lr_membership(T, delta, m)]


def _deltas(lam: Partition, nu: Partition, n: int) -> Iterator[Partition]:
    size = nu.size - lam.size
    if size < 0:
        return
    for delta in p11_partitions(size, 2 * n):
        if nu.contains(delta):
            yield delta


# Sundaram rule


def sundaram_allowed(n: int):
    def allowed(letter: int, row: int) -> bool:
        return letter % 2 == 0 or row <= n + (letter - 1) // 2
    return allowed


def is_sundaram(tau: SkewTableau, n: int) -> bool:
    from .lrmaps import is_lr_skew

    if not is_lr_skew(tau) or not in_P11(tau.weight()):
        return False
    ok = sundaram_allowed(n)
    return all(x <= 2 * n and ok(x, r + 1) for r, row in enumerate(tau.rows) for x in row)


def sundaram_tableaux_by_weight(lam, nu, n: int, delta=None) -> Iterator[SkewTableau]:
    lam, nu = Partition(lam), Partition(nu)
    _check(lam, nu, n)
    if not nu.contains(lam):
        return
    deltas = [Partition(delta)] if delta is not None else _deltas(lam, nu, n)
    allowed = sundaram_allowed(n)
    for d in deltas:
        yield from enumerate_lr_skew(nu, lam, weight=d, max_letter=2 * n, allowed=allowed)


def sundaram_tableaux(lam, nu, n: int) -> list[SkewTableau]:
    """All Sundaram-LR tableaux of shape ``nu/lam`` with weight in ``P^(1,1)_2n``."""
    return list(sundaram_tableaux_by_weight(lam, nu, n))


def boxplus_shift(tau: SkewTableau, kappa) -> SkewTableau:
    """Shape ``nu/lam`` weight ``delta`` to ``(nu+kappa)/lam`` weight ``delta+kappa``: ``kappa_i`` letters ``i`` appended to row ``i``."""
    kappa = Partition(kappa)
    nrows = max(len(tau.outer), len(kappa))
    outer = Partition(tau.outer.part(r) + kappa.part(r) for r in range(1, nrows + 1))
    rows = [list(tau.rows[r - 1]) if r <= len(tau.rows) else [] for r in range(1, nrows + 1)]
    for r in range(1, nrows + 1):
        rows[r - 1].extend([r] * kappa.part(r))
    return SkewTableau(outer, tau.inner, rows)


# Kwon rule


def kwon_condition(S: Tableau, delta, n: int) -> bool:
    """First row ``r_1 <= ... <= r_p`` of ``S`` satisfies ``r_i > delta^rev_{2i-1}``."""
    rev = reverse_padded(delta, 2 * n)
    first = S[0] if S else ()
    if len(first) > n:
        return False
    return all(r > rev[2 * i] for i, r in enumerate(first))


def kwon_tableaux(lam, nu, n: int) -> list[tuple[Partition, Tableau]]:
    """``(delta, S)`` with ``S`` in ``LR_{lam',delta'}^{nu'}`` satisfying the Kwon condition."""
    lam, nu = Partition(lam), Partition(nu)
    _check(lam, nu, n)
    out = []
    lc, nc = conjugate(lam), conjugate(nu)
    for delta in _deltas(lam, nu, n):
        for S in lr_tableaux(lc, conjugate(delta), nc):
            if kwon_condition(S, delta, n):
                out.append((delta, S))
    return out


def kwon_via_C3(lam, nu, n: int, witnesses: bool = False):
    """Count ``b`` in ``LR_{lam,delta}^nu`` (``delta`` in ``P^(1,1)_2n``) with ``S(b)`` flagged."""
    lam, nu = Partition(lam), Partition(nu)
    _check(lam, nu, n)
    found = []
    for delta in _deltas(lam, nu, n):
        for b in lr_tableaux(lam, delta, nu, 2 * n):
            if satisfies_flag(lusztig_involution(b, 2 * n)):
                found.append((delta, b))
    return found if witnesses else len(found)


def branching_sp(lam, nu, n: int) -> int:
    """``c_nu^lam(sp_2n)`` by all three rules; raises :class:`BranchingMismatch` on disagreement."""
    a = len(sundaram_tableaux(lam, nu, n))
    b = len(kwon_tableaux(lam, nu, n))
    c = kwon_via_C3(lam, nu, n)
    if not a == b == c:
        raise BranchingMismatch(
            f"lambda={tuple(lam)}, nu={tuple(nu)}, n={n}: sundaram={a}, kwon={b}, C3={c}")
    return a


def stable_branching(lam, nu, n: int) -> int:
    """``sum_{delta in P^(1,1)_2n} c_{lam,delta}^nu`` (equals the branching coefficient when ``nu`` has at most ``n`` parts)."""
    lam, nu = Partition(lam), Partition(nu)
    return sum(lr_coefficient(lam, d, nu) for d in _deltas(lam, nu, n))


# comparison of the two rules through companion -> R-matrix -> S


@dataclass
class BranchReport:
    lam: Partition
    nu: Partition
    n: int
    sundaram_by_delta: dict = field(default_factory=dict)
    kwon_by_delta: dict = field(default_factory=dict)
    images: list = field(default_factory=list)
    bijective: bool = True

    @property
    def sundaram_total(self) -> int:
        return sum(self.sundaram_by_delta.values())

    @property
    def kwon_total(self) -> int:
        return sum(self.kwon_by_delta.values())

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam), "nu": str(self.nu), "n": self.n,
            "sundaram_by_delta": {str(d): c for d, c in sorted(self.sundaram_by_delta.items())},
            "kwon_by_delta": {str(d): c for d, c in sorted(self.kwon_by_delta.items())},
            "sundaram_total": self.sundaram_total,
            "kwon_total": self.kwon_total,
            "images": self.images,
            "bijective": self.bijective,
        }


def compare_rules(lam, nu, n: int, all_lr: bool = False) -> BranchReport:
    """Push LR tableaux of shape ``nu/lam`` through companion, R-matrix and ``S``.

    With ``all_lr`` every LR tableau with weight in ``P^(1,1)_2n`` is traced,
    not only the Sundaram ones; each image records both admissibility flags.
    The composition is called bijective on this instance when it sends the
    Sundaram tableaux exactly onto the flagged ones.
    """
    lam, nu = Partition(lam), Partition(nu)
    _check(lam, nu, n)
    m = 2 * n
    rep = BranchReport(lam, nu, n)
    flagged = set()
    for delta in _deltas(lam, nu, n):
        for b in lr_tableaux(lam, delta, nu, m):
            if satisfies_flag(lusztig_involution(b, m)):
                flagged.add((delta, b))
                rep.kwon_by_delta[delta] = rep.kwon_by_delta.get(delta, 0) + 1
    hits = set()
    for delta in _deltas(lam, nu, n):
        source = enumerate_lr_skew(nu, lam, weight=delta, max_letter=m)
        for tau in source:
            sund = is_sundaram(tau, n)
            if not (sund or all_lr):
                continue
            if sund:
                rep.sundaram_by_delta[delta] = rep.sundaram_by_delta.get(delta, 0) + 1
            C = companion(tau)
            d2, T_hat = r_matrix_highest(lam, C, m)
            ST = lusztig_involution(T_hat, m)
            flag = satisfies_flag(ST)
            if sund and flag:
                hits.add((delta, T_hat))
            rep.images.append({
                "delta": str(delta), "tau": str(tau), "companion": str(C),
                "r_matrix": str(T_hat), "evacuated": str(ST),
                "sundaram": sund, "flag_C3": flag,
            })
    rep.bijective = (hits == flagged and rep.sundaram_total == len(flagged)
                     and all(img["flag_C3"] for img in rep.images if img["sundaram"]))
    return rep
