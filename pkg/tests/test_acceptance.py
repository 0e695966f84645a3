"""The twelve acceptance criteria, each with its time limit.

Run under pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

import time

import pytest

from genexp.branching import branching_sp, compare_rules, kwon_tableaux, kwon_via_C3, sundaram_tableaux
from genexp.crystal import Tableau, lusztig_involution
from genexp.exponents import charge_C, genexp_C, stable_B, stable_C
from genexp.extremal import max_power, min_power, sigma_min
from genexp.lrmaps import SkewTableau, companion, conjugation_symmetry, inverse_companion
from genexp.partitions import Partition, conjugate, partitions_up_to
from genexp.poly import Poly, TruncatedSeries
from genexp.verify import run_suite

RESULTS: dict[int, tuple[bool, float, float, str]] = {}

LIMITS = {1: 1, 2: 1, 3: 120, 4: 300, 5: 60, 6: 60, 7: 120, 8: 600, 9: 300, 10: 120, 11: 60, 12: 60}
TITLES = {
    1: "K^C_n_(1,1) = t^2 + ... + t^(2n-2), n = 2..5",
    2: "K^C_n_(2) = t + t^3 + ... + t^(2n-1), n = 2..5",
    3: "oracle agreement, |lambda| <= 6, C_3 and A at n = 3, 4",
    4: "route equality, |lambda| <= 6, n <= 3",
    5: "stable series: C_inf (1,1) and B = C of conjugate, N = 8",
    6: "type C columns reduce to type A at t^2, n <= 6, p <= 3",
    7: "growth in rank, |lambda| <= 6, n = 2, 3",
    8: "extremal powers, |lambda| <= 8, n <= 3, plus (7,6,5,3,1) at n = 5",
    9: "branching rules agree, |nu| <= 8, n <= 3, plus the three-case instance",
    10: "series identity with branching coefficients, n = 2, degree 6",
    11: "evacuation, conjugation symmetry and companion round trips",
    12: "type A charge forms agree, |lambda| <= 8, n <= 4",
}


def record(k: int, ok: bool, seconds: float, detail: str = ""):
    ok = ok and seconds < LIMITS[k]
    RESULTS[k] = (ok, seconds, LIMITS[k], detail)
    return ok


def timed(k: int, body):
    start = time.perf_counter()
    detail = ""
    try:
        out = body()
        ok, detail = out if isinstance(out, tuple) else (bool(out), "")
    except AssertionError as exc:
        ok, detail = False, str(exc)
    elapsed = time.perf_counter() - start
    ok = record(k, ok, elapsed, detail)
    assert ok, f"criterion {k} failed: {detail or 'time limit'} ({elapsed:.1f}s, limit {LIMITS[k]}s)"


def suite(name, **kw):
    rep = run_suite(name, **kw)
    return rep.passed, f"{rep.cases} cases, failures: {rep.failures[:3]}" if rep.failures else f"{rep.cases} cases"


# criteria


def c1():
    return all(genexp_C((1, 1), n) == Poly.from_coeffs({2 * k: 1 for k in range(1, n)}) for n in range(2, 6))


def c2():
    return all(genexp_C((2,), n) == Poly.from_coeffs({2 * k + 1: 1 for k in range(n)}) for n in range(2, 6))


def c3():
    return suite("oracle-agreement", max_size=6, c_ranks=(3,), a_ranks=(3, 4))


def c4():
    return suite("route-equality", max_size=6, ranks=(1, 2, 3))


def c5():
    if stable_C((1, 1), 8) != TruncatedSeries(Poly.parse("t^2 + t^4 + t^6 + t^8"), 8):
        return False, "stable_C((1,1), 8)"
    for lam in partitions_up_to(6):
        if stable_B(lam, 8) != stable_C(conjugate(lam), 8):
            return False, f"stable_B({lam})"
    return True


def c6():
    return suite("theorem-ac", max_n=6, max_p=3)


def c7():
    return suite("growth", max_size=6, ranks=(2, 3))


def c8():
    ok, detail = suite("extremal", max_size=8, ranks=(1, 2, 3), worked_instance=False)
    if not ok:
        return ok, detail
    lam, n = (7, 6, 5, 3, 1), 5
    K = genexp_C(lam, n)
    lo = min_power(lam, n)
    good = (lo == 13 and K.low_degree() == 13 and K.degree() == max_power(lam, n)
            and charge_C(sigma_min(lam, n), n) == 13 and 2 * lo >= Partition(lam).size)
    return good, f"{detail}; n=5 instance: lowest {K.low_degree()} (coefficient {K.coeff(K.low_degree())}), top {K.degree()}"


def c9():
    ok, detail = suite("branching-equality", max_size=8, ranks=(1, 2, 3))
    lam, nu = (2, 1, 1), (5, 4, 3, 3, 3, 2)
    counts = (len(sundaram_tableaux(lam, nu, 3)), len(kwon_tableaux(lam, nu, 3)), kwon_via_C3(lam, nu, 3),
              branching_sp(lam, nu, 3))
    rep = compare_rules(lam, nu, 3, all_lr=True)
    flags = [(img["delta"], img["sundaram"], img["flag_C3"]) for img in rep.images]
    want = [("3,3,3,3,2,2", True, True), ("4,4,2,2,2,2", False, False), ("4,4,3,3,1,1", False, False)]
    good = ok and counts == (1, 1, 1, 1) and sorted(flags) == want and rep.bijective
    return good, f"{detail}; instance counts {counts}, admissible {flags}"


def c10():
    return suite("series-identity", max_size=4, n=2, cutoff=6)


def c11():
    ok1, d1 = suite("involutions", max_size=6, max_m=6)
    ok2, d2 = suite("conjugation-round-trip")
    T = Tableau([[1, 1, 3, 4], [2, 3, 4], [3]])
    skew = SkewTableau.parse("5,4,4,2|3,3,1|1,1/2/1,2,3/1,2")
    conj_example = (companion(skew) == T
                 and lusztig_involution(T, 4) == Tableau([[1, 1, 2, 2], [2, 3, 4], [4]])
                 and conjugation_symmetry(T, (3, 3, 1), 4) == Tableau([[1, 2, 4], [2, 4], [3, 5], [4]])
                 and conjugation_symmetry(Tableau([[1, 2, 4], [2, 4], [3, 5], [4]]), (3, 2, 2), 5) == T)
    tau = SkewTableau.parse("5,5,3,3,3|3,2,1,1|1,1/1,2,2/1,3/2,4/1,3,5")
    T_COMP = Tableau([[1, 1, 2, 3, 5], [2, 2, 4], [3, 5], [4], [5]])
    companion_example = companion(tau) == T_COMP and inverse_companion(T_COMP, tau.inner) == tau
    return (ok1 and ok2 and conj_example and companion_example,
            f"involutions {d1}; conjugation {d2}; conjugation example {conj_example}; companion example {companion_example}")


def c12():
    return suite("charge-a-forms", max_size=8, ranks=(1, 2, 3, 4))


CRITERIA = {1: c1, 2: c2, 3: c3, 4: c4, 5: c5, 6: c6, 7: c7, 8: c8, 9: c9, 10: c10, 11: c11, 12: c12}


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    timed(k, CRITERIA[k])


def summary_lines() -> list[str]:
    lines = []
    for k in sorted(CRITERIA):
        if k not in RESULTS:
            lines.append(f"criterion {k:2d}: NOT RUN  {TITLES[k]}")
            continue
        ok, secs, limit, detail = RESULTS[k]
        lines.append(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {secs:7.2f}s / {limit}s  {TITLES[k]}"
                     + (f"  [{detail}]" if detail else ""))
    return lines


if __name__ == "__main__":
    for k in sorted(CRITERIA):
        try:
            timed(k, CRITERIA[k])
        except AssertionError:
            pass
    print("\n".join(summary_lines()))
