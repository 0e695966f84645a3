"""Generalized exponents of types A and C from crystal statistics.

Type A sums over zero-weight tableaux.  Type C has three routes: King
tableaux pushed through ``L`` into the distinguished set, direct enumeration
of the distinguished set, and the Sundaram-LR / R-matrix pipeline.  The
stable series of types B, C and D live here too.

Barred letters are encoded as integers: ``k -> 2k-1`` and ``k' -> 2k``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .crystal import (
    EpsPhiProfile,
    Tableau,
    crystal_e,
    crystal_f,
    _from_word,
    enumerate_ssyt,
    enumerate_ssyt_content,
    eps_phi,
    reading_word,
    word_eps_phi,
    word_eps_phi_infinite,
)
from .partitions import Partition, conjugate, p2_partitions
from .poly import Poly, TruncatedSeries


def _check_rank(lam: Partition, n: int):
    if n < 1:
        raise ValueError("rank must be positive")
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


# type A


def zero_weight_tableaux(lam: Iterable[int], n: int) -> Iterator[Tableau]:
    """SSYT of shape ``lam`` where each of ``1..n`` appears ``|lam|/n`` times."""
    lam = Partition(lam)
    if lam.size % n or len(lam) > n:
        return
    yield from enumerate_ssyt_content(lam, (lam.size // n,) * n)


def genexp_A(lam: Iterable[int], n: int) -> Poly:
    """``K_{lam,0}`` for gl_n: ``sum t^{sum_i i*eps_i(b)}`` over zero-weight ``b``."""
    return genexp_A_multi(lam, n).specialize()


@lru_cache(maxsize=None)
def _genexp_A_multi(lam: Partition, n: int) -> Poly:
    terms: dict[tuple[int, ...], int] = {}
    for T in zero_weight_tableaux(lam, n):
        key = (0,) + eps_phi(T, n).eps
        terms[key] = terms.get(key, 0) + 1
    return Poly(terms)


def genexp_A_multi(lam: Iterable[int], n: int) -> Poly:
    """``sum prod t_i^{eps_i(b)}``; specializing ``t_i -> t^i`` gives :func:`genexp_A`."""
    return _genexp_A_multi(Partition(lam), n)


def genexp_A_charge_form(lam: Iterable[int], n: int) -> Poly:
    """Same sum with the statistic ``sum_i (n-i) eps_i(b)``."""
    counts: dict[int, int] = {}
    for T in zero_weight_tableaux(lam, n):
        eps = eps_phi(T, n).eps
        d = sum((n - i) * e for i, e in enumerate(eps, start=1))
        counts[d] = counts.get(d, 0) + 1
    return Poly.from_coeffs(counts)


# King tableaux and the map L


def bar_encode(letter: str) -> int:
    """``"k"`` -> ``2k-1`` and ``"k'"`` -> ``2k``."""
    letter = letter.strip()
    if letter.endswith("'"):
        return 2 * int(letter[:-1])
    return 2 * int(letter) - 1


def bar_decode(x: int) -> str:
    return f"{(x + 1) // 2}'" if x % 2 == 0 else str((x + 1) // 2)


def king_str(T: Tableau) -> str:
    return "/".join(",".join(bar_decode(x) for x in row) for row in T)


def satisfies_flag(T: Tableau) -> bool:
    """Row ``i`` (1-based) has entries at least ``2i-1``."""
    return all(not row or row[0] >= 2 * i - 1 for i, row in enumerate(T, start=1))


def is_king_zero(T: Tableau, n: int) -> bool:
    if len(T) > n or (T and T.max_entry() > 2 * n):
        return False
    c = T.content(2 * n)
    return satisfies_flag(T) and all(c[2 * k] == c[2 * k + 1] for k in range(n))


def enumerate_king_zero(lam: Iterable[int], n: int) -> list[Tableau]:
    """Zero-weight King tableaux of shape ``lam`` for ``C_n``, sorted by rows."""
    lam = Partition(lam)
    _check_rank(lam, n)
    return list(_king_zero(lam, n))


@lru_cache(maxsize=None)
def _king_zero(lam: Partition, n: int) -> tuple[Tableau, ...]:
    if lam.size % 2:
        return ()
    half = lam.size // 2
    out = []

    def contents(k, left, acc):
        if k == n:
            if left == 0:
                yield acc
            return
        for c in range(left, -1, -1):
            yield from contents(k + 1, left - c, acc + (c, c))

    for content in contents(0, half, ()):
        out.extend(enumerate_ssyt_content(lam, content, rows_for=lambda k: (k + 1) // 2))
    return tuple(sorted(out))


def lower_odd_strings(word) -> list[int]:
    """Lowest element of every odd ``sl_2`` string: all unbracketed ``2i-1`` become ``2i``."""
    w = list(word)
    pending: dict[int, list[int]] = {}
    for pos, x in enumerate(w):
        if x % 2:
            pending.setdefault(x, []).append(pos)
        else:
            stack = pending.get(x - 1)
            if stack:
                stack.pop()
    for x, stack in pending.items():
        for pos in stack:
            w[pos] = x + 1
    return w


def king_to_distinguished(T: Tableau, n: int, check: bool = True) -> Tableau:
    """``L(T)``: lowest weight in each ``sl_2`` string for the indices ``1, 3, ..., 2n-1``."""
    if check and not is_king_zero(T, n):
        raise ValueError(f"{king_str(T)} is not a zero-weight King tableau for C_{n}")
    return _from_word(T.shape, lower_odd_strings(reading_word(T)))


def king_to_distinguished_slow(T: Tableau, n: int) -> Tableau:
    """``L(T)`` by repeated ``f_{2i-1}``; reference implementation for tests."""
    m = 2 * n
    b = T
    for i in range(1, m, 2):
        while True:
            nb = crystal_f(b, i, m)
            if nb is None:
                break
            b = nb
    return b


def distinguished_to_king(b: Tableau, n: int) -> Tableau:
    """Inverse of ``L``: apply ``e_{2i-1}^{k_i/2}`` with ``k_i = N_{2i} - N_{2i-1}``."""
    m = 2 * n
    if not is_distinguished_star(b, n, flag=True):
        raise ValueError(f"{b} is not in the flagged starred distinguished set for n={n}")
    c = b.content(m)
    for i in range(1, n + 1):
        k = c[2 * i - 1] - c[2 * i - 2]
        for _ in range(k // 2):
            b = crystal_e(b, 2 * i - 1, m)
    return b


# starred distinguished tableaux and the type C charge


def is_distinguished_star(b: Tableau, n: int, flag: bool = True) -> bool:
    """(C1) ``phi_i = 0`` and (C2) ``eps_i`` even for odd ``i``; (C3) the flag when ``flag``."""
    m = 2 * n
    if b and b.max_entry() > m:
        return False
    prof = eps_phi(b, m)
    for i in range(1, m, 2):
        if prof.phi_i(i) or prof.eps_i(i) % 2:
            return False
    return not flag or satisfies_flag(b)


def charge_C(b: Tableau, n: int) -> int:
    """``sum_{i<2n} (2n-i) ceil(eps_i(b)/2)``."""
    m = 2 * n
    prof = eps_phi(b, m)
    return sum((m - i) * _ceil_half(prof.eps_i(i)) for i in range(1, m))


def charge_C_dual(b: Tableau, n: int) -> int:
    """``|eps*(b) + mu*_{b,n}| / 2`` from the weight-vector form."""
    m = 2 * n
    prof = eps_phi(b, m)
    theta = {i: prof.eps_i(m - i) for i in range(1, m)}
    for i in range(1, n):
        theta[2 * i] += prof.eps_i(m - 2 * i) % 2
    total = sum(i * a for i, a in theta.items())
    if total % 2:
        raise ArithmeticError(f"odd |theta*| for {b}; (C2) must fail")
    return total // 2


class DistinguishedProfile(NamedTuple):
    mu_b: dict
    theta: dict
    charge: int


def distinguished_profile_star(b: Tableau, n: int) -> DistinguishedProfile:
    """``mu*_{b,n}``, ``theta*_n(b) = eps*(b) + mu*_{b,n}`` and the charge."""
    m = 2 * n
    prof = eps_phi(b, m)
    mu = {2 * i: prof.eps_i(m - 2 * i) % 2 for i in range(1, n) if prof.eps_i(m - 2 * i) % 2}
    theta = {i: prof.eps_i(m - i) + mu.get(i, 0) for i in range(1, m)}
    theta = {i: a for i, a in theta.items() if a}
    return DistinguishedProfile(mu, theta, sum(i * a for i, a in theta.items()) // 2)


def multi_key_C(b: Tableau, n: int) -> tuple[int, ...]:
    """Exponent vector of ``prod t_{2n-i}^{ceil(eps_i/2)}``."""
    return _multi_key_from_word(reading_word(b), n)


def _multi_key_from_word(word, n: int) -> tuple[int, ...]:
    m = 2 * n
    prof = word_eps_phi(word, m)
    key = [0] * m
    for i in range(1, m):
        key[m - i] = _ceil_half(prof.eps_i(i))
    return tuple(key)


def enumerate_distinguished_star(lam: Iterable[int], n: int, flag: bool = True) -> list[Tableau]:
    """Direct enumeration of the starred distinguished set, sorted."""
    lam = Partition(lam)
    _check_rank(lam, n)
    if flag:
        ok = lambda r, row: row[0] >= 2 * r + 1
    else:
        ok = None
    return sorted(b for b in enumerate_ssyt(lam, 2 * n, row_ok=ok) if is_distinguished_star(b, n, flag))


# type C generalized exponents


@lru_cache(maxsize=None)
def _genexp_C_multi(lam: Partition, n: int) -> Poly:
    _check_rank(lam, n)
    terms: dict[tuple[int, ...], int] = {}
    for T in _king_zero(lam, n):
        key = _multi_key_from_word(lower_odd_strings(reading_word(T)), n)
        terms[key] = terms.get(key, 0) + 1
    return Poly(terms)


def genexp_C(lam: Iterable[int], n: int) -> Poly:
    """``K^{C_n}_{lam,0}(t) = sum_T t^{ch(L(T))}`` over zero-weight King tableaux."""
    return _genexp_C_multi(Partition(lam), n).specialize()


def genexp_C_multi(lam: Iterable[int], n: int) -> Poly:
    """``sum_T prod t_{2n-i}^{ceil(eps_i(L(T))/2)}``."""
    return _genexp_C_multi(Partition(lam), n)


def genexp_C_witnesses(lam: Iterable[int], n: int) -> list[tuple[Tableau, Tableau, int]]:
    """``(T, L(T), charge)`` for every zero-weight King tableau."""
    lam = Partition(lam)
    out = []
    for T in _king_zero(lam, n):
        b = king_to_distinguished(T, n)
        out.append((T, b, charge_C(b, n)))
    return out


def genexp_C_direct(lam: Iterable[int], n: int) -> Poly:
    """Charge generating function over the directly enumerated distinguished set."""
    counts: dict[int, int] = {}
    for b in enumerate_distinguished_star(lam, n, flag=True):
        d = charge_C(b, n)
        counts[d] = counts.get(d, 0) + 1
    return Poly.from_coeffs(counts)


def max_degree_C(lam: Iterable[int], n: int) -> int:
    """``<lam, rho^vee> = sum lam_i (2n-2i+1)/2`` (floor when ``|lam|`` is odd)."""
    lam = Partition(lam)
    return sum(lam.part(i) * (2 * n - 2 * i + 1) for i in range(1, n + 1)) // 2


def mu_b_n(prof: EpsPhiProfile, n: int) -> dict[int, int]:
    """``mu_{b,n} = sum_{i<n} (phi_{2i} mod 2) omega_{2i}``."""
    return {2 * i: prof.phi_i(2 * i) % 2 for i in range(1, n) if prof.phi_i(2 * i) % 2}


def sundaram_statistic(b: Tableau, n: int) -> int:
    """``|phi(b) + mu_{b,n}| / 2`` on ``B_{2n}``."""
    prof = eps_phi(b, 2 * n)
    total = sum(i * a for i, a in enumerate(prof.phi, start=1))
    total += sum(i * a for i, a in mu_b_n(prof, n).items())
    if total % 2:
        raise ArithmeticError(f"odd |phi + mu| for {b}")
    return total // 2


def d_hat(lam: Iterable[int], n: int) -> list[Tableau]:
    """Distinct ``T_hat(tau)`` over Sundaram-LR tableaux with ``|nu|/2`` up to the degree bound."""
    from .branching import sundaram_tableaux_by_weight
    from .lrmaps import companion, r_matrix_highest

    lam = Partition(lam)
    _check_rank(lam, n)
    m = 2 * n
    out = set()
    top = max_degree_C(lam, n)
    for size in range(lam.size, 2 * top + 1, 2):
        for nu in p2_partitions(size, m):
            if not nu.contains(lam):
                continue
            for tau in sundaram_tableaux_by_weight(lam, nu, n):
                C = companion(tau)
                _, T_hat = r_matrix_highest(lam, C, m)
                out.add(T_hat)
    return sorted(out)


def genexp_C_sundaram(lam: Iterable[int], n: int) -> Poly:
    """``sum_{b in D_hat(lam)} t^{|phi(b) + mu_{b,n}|/2}``."""
    lam = Partition(lam)
    _check_rank(lam, n)
    if lam.size % 2:
        return Poly()
    counts: dict[int, int] = {}
    for b in d_hat(lam, n):
        d = sundaram_statistic(b, n)
        counts[d] = counts.get(d, 0) + 1
    return Poly.from_coeffs(counts)


def growth_delta(lam: Iterable[int], n: int) -> Poly:
    """``K^{C_{n+1}} - K^{C_n}``; a negative coefficient raises (it cannot happen)."""
    diff = genexp_C(lam, n + 1) - genexp_C(lam, n)
    if any(c < 0 for c in diff.coeffs().values()):
        raise ArithmeticError(f"negative growth coefficient for {tuple(lam)}, n={n}: {diff}")
    return diff


# stable series


def is_distinguished(prof: EpsPhiProfile) -> bool:
    """``eps_i = 0`` and ``phi_i`` even for every odd ``i``."""
    return (all(e == 0 for e in prof.eps[0::2])
            and all(p % 2 == 0 for p in prof.phi[0::2]))


def _stable_terms(lam: Partition, N: int, m: int) -> dict[tuple[int, ...], int]:
    """Distinguished tableaux over ``1..m`` with degree at most ``N``, keyed by exponent vector."""
    budget = 2 * N - lam.size  # bounds |eps| = sum i*eps_i, as |phi| = |lam| + |eps|
    terms: dict[tuple[int, ...], int] = {}
    if budget < 0:
        return terms

    def row_ok(r, row):
        # every first-row entry x >= 2 is an unbracketed letter counted by eps_{x-1}
        return r or sum(row) - len(row) <= budget

    for b in enumerate_ssyt(lam, m, row_ok=row_ok):
        prof = word_eps_phi_infinite(reading_word(b))
        if not is_distinguished(prof):
            continue
        theta = list(prof.phi)
        for i in range(1, len(theta) // 2 + 1):
            theta[2 * i - 1] += theta[2 * i - 1] % 2
        degree2 = sum(i * a for i, a in enumerate(theta, start=1))
        if degree2 > 2 * N:
            continue
        key = (0,) + tuple(a // 2 for a in theta)
        terms[key] = terms.get(key, 0) + 1
    return terms


@lru_cache(maxsize=None)
def _stable_C_multi(lam: Partition, N: int, check: bool) -> Poly:
    if lam.size % 2:
        return Poly()
    m = max(2 * N, len(lam), 1)
    out = Poly(_stable_terms(lam, N, m))
    if check:
        again = Poly(_stable_terms(lam, N, m + 2))
        if again != out:
            raise ArithmeticError(f"stable series for {lam} changed between alphabets {m} and {m + 2}")
    return out


def stable_C_multi(lam: Iterable[int], N: int, check: bool = False) -> Poly:
    """``sum_{b in D(lam)} t^{(phi(b) + mu_b)/2}`` truncated at weighted degree ``N``."""
    return _stable_C_multi(Partition(lam), N, check)


def stable_C(lam: Iterable[int], N: int, check: bool = False) -> TruncatedSeries:
    """``K^{C_infty}_{lam,0}(t)`` exact to ``t^N``.

    A distinguished tableau with largest letter ``M`` has degree at least
    ``M/2``, so the alphabet ``1..2N`` already holds every contributing
    tableau.  ``check=True`` recomputes over ``1..2N+2`` and compares.
    """
    return TruncatedSeries(stable_C_multi(lam, N, check).specialize(), N)


def stable_B(lam: Iterable[int], N: int, check: bool = False) -> TruncatedSeries:
    return stable_C(conjugate(Partition(lam)), N, check)


def stable_D(lam: Iterable[int], N: int, check: bool = False) -> TruncatedSeries:
    return stable_B(lam, N, check)
