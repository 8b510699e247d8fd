"""Sparse real power series in radial variables, over exact rationals.

Used wherever a model is naturally a function of real quantities such as
x = |z|^2 or r = |z + conj(z)|: Hartogs profile functions F, the implicit
Taub-NUT inversion, and the tubular ODE solution.  Truncation is by total
degree.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .scalars import RationalLike, as_fraction

Expo = Tuple[int, ...]


class RSeries:
    """Truncated series sum c_e x^e over Fraction coefficients."""

    __slots__ = ("nvars", "d", "coeffs")

    def __init__(self, nvars: int, d: int,
                 coeffs: Dict[Expo, Fraction] | None = None):
        if nvars < 1 or d < 0:
            raise ValueError("need nvars >= 1, degree >= 0")
        clean: Dict[Expo, Fraction] = {}
        for e, c in (coeffs or {}).items():
            c = as_fraction(c)
            if not c:
                continue
            if sum(e) > d:
                raise ValueError(f"exponent {e} exceeds degree {d}")
            clean[tuple(e)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("RSeries is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, d: int) -> "RSeries":
        return cls(nvars, d, {})

    @classmethod
    def constant(cls, nvars: int, d: int, value: RationalLike) -> "RSeries":
        return cls(nvars, d, {(0,) * nvars: as_fraction(value)})

    @classmethod
    def var(cls, nvars: int, d: int, which: int = 0) -> "RSeries":
        e = [0] * nvars
        e[which] = 1
        return cls(nvars, d, {tuple(e): Fraction(1)})

    @classmethod
    def univariate(cls, coeffs: Sequence[RationalLike], d: int | None = None
                   ) -> "RSeries":
        """1-variable series from a coefficient list [c0, c1, ...]."""
        if d is None:
            d = len(coeffs) - 1
        return cls(1, d, {(j,): as_fraction(c)
                          for j, c in enumerate(coeffs) if j <= d})

    # -- access -------------------------------------------------------
    def get(self, e: Expo) -> Fraction:
        return self.coeffs.get(tuple(e), Fraction(0))

    def ucoeff(self, j: int) -> Fraction:
        """Univariate convenience: coefficient of x^j."""
        if self.nvars != 1:
            raise ValueError("ucoeff is univariate-only")
        return self.get((j,))

    def constant_term(self) -> Fraction:
        return self.get((0,) * self.nvars)

    # -- ring ---------------------------------------------------------
    def _check(self, other: "RSeries") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"nvars {self.nvars} != {other.nvars}")

    def __add__(self, other: "RSeries") -> "RSeries":
        self._check(other)
        d = min(self.d, other.d)
        out: Dict[Expo, Fraction] = {}
        for src in (self.coeffs, other.coeffs):
            for e, c in src.items():
                if sum(e) > d:
                    continue
                out[e] = out.get(e, Fraction(0)) + c
        return RSeries(self.nvars, d, out)

    def __neg__(self) -> "RSeries":
        return RSeries(self.nvars, self.d, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "RSeries") -> "RSeries":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "RSeries":
        f = as_fraction(factor)
        return RSeries(self.nvars, self.d,
                       {e: c * f for e, c in self.coeffs.items()})

    def __mul__(self, other: "RSeries") -> "RSeries":
        self._check(other)
        d = min(self.d, other.d)
        out: Dict[Expo, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            s1 = sum(e1)
            if s1 > d:
                continue
            for e2, c2 in other.coeffs.items():
                if s1 + sum(e2) > d:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return RSeries(self.nvars, d, out)

    def truncate(self, d: int) -> "RSeries":
        if d > self.d:
            raise ValueError("cannot extend truncation degree")
        return RSeries(self.nvars, d,
                       {e: c for e, c in self.coeffs.items() if sum(e) <= d})

    def __eq__(self, other) -> bool:
        if not isinstance(other, RSeries):
            return NotImplemented
        return ((self.nvars, self.d) == (other.nvars, other.d)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.nvars, self.d, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"RSeries(nvars={self.nvars}, d={self.d}, {len(self.coeffs)} terms)"

    # -- calculus (univariate helpers used by the Hartogs criterion) ---
    def derivative(self, which: int = 0) -> "RSeries":
        out: Dict[Expo, Fraction] = {}
        for e, c in self.coeffs.items():
            if e[which] == 0:
                continue
            e2 = list(e)
            e2[which] -= 1
            out[tuple(e2)] = c * e[which]
        return RSeries(self.nvars, self.d, out)

    def integrate(self, which: int = 0) -> "RSeries":
        """Antiderivative with zero constant; drops the top-degree slice."""
        out: Dict[Expo, Fraction] = {}
        for e, c in self.coeffs.items():
            if sum(e) + 1 > self.d:
                continue
            e2 = list(e)
            e2[which] += 1
            out[tuple(e2)] = c / e2[which]
        return RSeries(self.nvars, self.d, out)

    def shift_up(self, which: int = 0) -> "RSeries":
        """Multiply by the variable ``which`` (drops the top slice)."""
        out: Dict[Expo, Fraction] = {}
        for e, c in self.coeffs.items():
            if sum(e) + 1 > self.d:
                continue
            e2 = list(e)
            e2[which] += 1
            out[tuple(e2)] = c
        return RSeries(self.nvars, self.d, out)

    # -- transcendental ops -------------------------------------------
    def _compose(self, coeff_at, constant: Fraction) -> "RSeries":
        if self.constant_term():
            raise ValueError("composition needs a zero constant term")
        out = RSeries.constant(self.nvars, self.d, constant)
        power = RSeries.constant(self.nvars, self.d, 1)
        for k in range(1, self.d + 1):
            power = power * self
            if not power.coeffs:
                break
            ck = coeff_at(k)
            if ck:
                out = out + power.scale(ck)
        return out

    def exp(self) -> "RSeries":
        return self._compose(lambda k: Fraction(1, math.factorial(k)), Fraction(1))

    def log1p(self) -> "RSeries":
        return self._compose(lambda k: Fraction((-1) ** (k + 1), k), Fraction(0))

    def pow1p(self, e: RationalLike) -> "RSeries":
        """(1 + self)^e, generalized binomial, rational exponent."""
        e = as_fraction(e)

        def binom(k: int) -> Fraction:
            num = Fraction(1)
            for i in range(k):
                num *= (e - i)
            return num / math.factorial(k)

        return self._compose(binom, Fraction(1))

    def pow_normalized(self, e: RationalLike) -> "RSeries":
        """self^e for a series with positive rational constant term."""
        c0 = self.constant_term()
        if c0 <= 0:
            raise ValueError("pow_normalized needs a positive constant term")
        e = as_fraction(e)
        body = (self.scale(Fraction(1) / c0)
                - RSeries.constant(self.nvars, self.d, 1))
        scalar = c0 ** e.numerator if e.denominator == 1 else None
        if scalar is None:
            raise ValueError("non-integer exponent with non-unit constant term;"
                             " normalize the series first")
        return body.pow1p(e).scale(scalar)
