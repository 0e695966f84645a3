"""Exact sparse polynomials with integer coefficients and truncated power series.

Monomials are keyed by exponent tuples indexed by variable number, trailing
zeros stripped.  Variable 0 is the single variable ``t``; variable ``i >= 1``
is ``t_i``, the variable attached to the fundamental weight ``omega_i``.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Mapping


def _norm(key: Iterable[int]) -> tuple[int, ...]:
    key = list(key)
    while key and key[-1] == 0:
        key.pop()
    return tuple(key)


def _add_keys(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return _norm(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


class Poly:
    """Immutable sparse polynomial; no zero coefficient is ever stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        for k, c in (terms or {}).items():
            if c:
                k = _norm(k)
                clean[k] = clean.get(k, 0) + int(c)
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    # constructors

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls({(): 1})

    @classmethod
    def monomial(cls, var: int = 0, exp: int = 1, coeff: int = 1) -> "Poly":
        key = [0] * (var + 1)
        key[var] = exp
        return cls({tuple(key): coeff})

    @classmethod
    def t_power(cls, k: int, coeff: int = 1) -> "Poly":
        return cls({(k,): coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, int]) -> "Poly":
        """Univariate polynomial from ``{degree: coefficient}``."""
        return cls({(int(d),): c for d, c in coeffs.items()})

    @classmethod
    def from_exponent_vector(cls, exps: Mapping[int, int], coeff: int = 1) -> "Poly":
        """Multivariable monomial ``prod t_i^{exps[i]}``."""
        if not exps:
            return cls({(): coeff})
        key = [0] * (max(exps) + 1)
        for i, e in exps.items():
            key[i] = e
        return cls({tuple(key): coeff})

    # basic accessors

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_univariate(self) -> bool:
        return all(len(k) <= 1 for k in self._terms)

    def coeffs(self) -> dict[int, int]:
        """``{degree: coefficient}`` for a univariate polynomial."""
        if not self.is_univariate():
            raise ValueError("coeffs() requires a polynomial in t alone")
        return {(k[0] if k else 0): c for k, c in sorted(self._terms.items())}

    def coeff(self, degree: int) -> int:
        return self._terms.get(_norm((degree,)), 0)

    def degree(self) -> int:
        """Largest exponent of ``t`` (univariate)."""
        if self.is_zero():
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs())

    def low_degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no degree")
        return min(self.coeffs())

    def weighted_degree(self, key: tuple[int, ...]) -> int:
        # t_i has weight i; t (variable 0) has weight 1
        return sum((i if i else 1) * e for i, e in enumerate(key))

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[tuple[int, ...], int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = _add_keys(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly({(): other})
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitutions

    def specialize(self) -> "Poly":
        """Substitute ``t_i -> t^i`` (and keep ``t``), giving a polynomial in ``t``."""
        out: dict[tuple[int, ...], int] = {}
        for k, c in self._terms.items():
            d = self.weighted_degree(k)
            out[(d,)] = out.get((d,), 0) + c
        return Poly(out)

    def substitute_power(self, m: int) -> "Poly":
        """``P(t) -> P(t^m)`` for a univariate polynomial."""
        return Poly({(d * m,): c for d, c in self.coeffs().items()})

    def __call__(self, value):
        """Evaluate a univariate polynomial."""
        return sum(c * value ** d for d, c in self.coeffs().items())

    def truncate(self, cutoff: int) -> "Poly":
        """Drop monomials of weighted degree above ``cutoff``."""
        return Poly({k: c for k, c in self._terms.items() if self.weighted_degree(k) <= cutoff})

    # text and JSON

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items(), key=lambda kv: (self.weighted_degree(kv[0]), kv[0])):
            mono = _mono_str(k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        """``{"coeffs": {"2": 1}}`` when univariate, else ``{"terms": [[{"2": 1}, coeff], ...]}``."""
        if self.is_univariate():
            return {"coeffs": {str(d): c for d, c in self.coeffs().items()}}
        terms = []
        for k, c in sorted(self._terms.items()):
            terms.append([{str(i): e for i, e in enumerate(k) if e}, c])
        return {"terms": terms}

    @classmethod
    def from_json(cls, data) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        if "coeffs" in data:
            return cls.from_coeffs({int(d): c for d, c in data["coeffs"].items()})
        out = Poly()
        for exps, c in data["terms"]:
            out = out + cls.from_exponent_vector({int(i): e for i, e in exps.items()}, c)
        return out

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse the canonical text form, e.g. ``"t^2 + 2*t^4"`` or ``"t_2 + t_4"``."""
        text = "".join(text.split())
        if text in ("", "0"):
            return cls()
        out = Poly()
        for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
            coeff = -1 if sign == "-" else 1
            exps: dict[int, int] = {}
            for factor in body.split("*"):
                m = re.fullmatch(r"t(?:_(\d+))?(?:\^(\d+))?", factor)
                if m:
                    var = int(m.group(1)) if m.group(1) else 0
                    exps[var] = exps.get(var, 0) + (int(m.group(2)) if m.group(2) else 1)
                elif re.fullmatch(r"\d+", factor):
                    coeff *= int(factor)
                else:
                    raise ValueError(f"cannot parse monomial factor {factor!r}")
            out = out + cls.from_exponent_vector(exps, coeff)
        return out


def _mono_str(k: tuple[int, ...]) -> str:
    factors = []
    for i, e in enumerate(k):
        if not e:
            continue
        name = "t" if i == 0 else f"t_{i}"
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors)


def _coerce(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly({(): x})
    raise TypeError(f"cannot combine Poly with {type(x).__name__}")


class CutoffMismatch(ValueError):
    """Two truncated series were compared at different precisions."""


class TruncatedSeries:
    """Power series in ``t`` known exactly up to ``t^cutoff``."""

    __slots__ = ("poly", "cutoff")

    def __init__(self, poly: Poly, cutoff: int):
        if not poly.is_univariate():
            raise ValueError("truncated series are univariate in t")
        self.cutoff = int(cutoff)
        self.poly = poly.truncate(self.cutoff)

    def coeffs(self) -> dict[int, int]:
        return self.poly.coeffs()

    def coeff(self, k: int) -> int:
        if k > self.cutoff:
            raise CutoffMismatch(f"coefficient of t^{k} is beyond cutoff {self.cutoff}")
        return self.poly.coeff(k)

    def truncate(self, cutoff: int) -> "TruncatedSeries":
        if cutoff > self.cutoff:
            raise CutoffMismatch(f"cannot extend cutoff {self.cutoff} to {cutoff}")
        return TruncatedSeries(self.poly, cutoff)

    def _other(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries(_coerce(other), self.cutoff)

    def __add__(self, other):
        other = self._other(other)
        return TruncatedSeries(self.poly + other.poly, min(self.cutoff, other.cutoff))

    def __sub__(self, other):
        other = self._other(other)
        return TruncatedSeries(self.poly - other.poly, min(self.cutoff, other.cutoff))

    def __mul__(self, other):
        other = self._other(other)
        cutoff = min(self.cutoff, other.cutoff)
        out: dict[tuple[int, ...], int] = {}
        for d1, c1 in self.poly.coeffs().items():
            for d2, c2 in other.poly.coeffs().items():
                if d1 + d2 <= cutoff:
                    out[(d1 + d2,)] = out.get((d1 + d2,), 0) + c1 * c2
        return TruncatedSeries(Poly(out), cutoff)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._other(other)
        if other.cutoff != self.cutoff:
            raise CutoffMismatch(
                f"series known to t^{self.cutoff} and t^{other.cutoff}; truncate explicitly")
        return self.poly == other.poly

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries({self.poly}, cutoff={self.cutoff})"

    def __str__(self):
        return f"{self.poly} + O(t^{self.cutoff + 1})"

    def to_json(self) -> dict:
        return {"coeffs": self.poly.to_json()["coeffs"], "cutoff": self.cutoff}


def series_inverse_product(exponents: Iterable[int], cutoff: int) -> TruncatedSeries:
    """Coefficients of ``prod 1/(1 - t^e)`` up to ``t^cutoff``."""
    exponents = list(exponents)
    if not exponents or any(e <= 0 for e in exponents):
        raise ValueError("exponents must be a nonempty list of positive integers")
    coeffs = [1] + [0] * cutoff
    for e in exponents:
        for d in range(e, cutoff + 1):
            coeffs[d] += coeffs[d - e]
    return TruncatedSeries(Poly.from_coeffs(dict(enumerate(coeffs))), cutoff)
