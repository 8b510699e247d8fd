"""Exact Gaussian-rational scalars, the coefficient field for every series.

All arithmetic is over ``fractions.Fraction``; nothing here ever rounds.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, str, Fraction]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``p/q`` strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_fraction(q: Fraction) -> str:
    """Canonical ``p/q`` (or ``p`` when the denominator is 1)."""
    return str(q)


class CScalar:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", as_fraction(re))
        object.__setattr__(self, "im", as_fraction(im))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("CScalar is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def of(cls, value: "CScalar | RationalLike") -> "CScalar":
        if isinstance(value, CScalar):
            return value
        return cls(value)

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    # -- field operations ---------------------------------------------
    def __add__(self, other: "CScalar") -> "CScalar":
        other = CScalar.of(other)
        return CScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "CScalar") -> "CScalar":
        other = CScalar.of(other)
        return CScalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "CScalar":
        return CScalar(-self.re, -self.im)

    def __mul__(self, other: "CScalar | RationalLike") -> "CScalar":
        other = CScalar.of(other)
        return CScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __radd__ = __add__
    __rmul__ = __mul__

    def __truediv__(self, other: "CScalar | RationalLike") -> "CScalar":
        other = CScalar.of(other)
        n = other.abs2()
        if not n:
            raise ZeroDivisionError("division by zero CScalar")
        return CScalar(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def conj(self) -> "CScalar":
        return CScalar(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|q|^2 = re^2 + im^2, a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    # -- comparisons / hashing ----------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CScalar(other)
        if not isinstance(other, CScalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"CScalar({self.re!s}, {self.im!s})"

    # -- text form ----------------------------------------------------
    def format(self) -> str:
        """Render as ``p/q``, ``p/q i`` or ``p/q+p/q i`` (canonical)."""
        if not self.im:
            return format_fraction(self.re)
        if not self.re:
            return f"{format_fraction(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{format_fraction(self.re)}{sign}{format_fraction(abs(self.im))}i"

    @classmethod
    def parse(cls, text: str) -> "CScalar":
        s = text.strip().replace(" ", "")
        if not s.endswith("i"):
            return cls(Fraction(s))
        body = s[:-1]
        # split the imaginary part off at the last top-level +/- sign
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "+-/":
                re_part, im_part = body[:pos], body[pos:]
                if im_part in ("+", "-"):
                    im_part += "1"
                return cls(Fraction(re_part), Fraction(im_part))
        if body in ("", "+", "-"):
            body += "1"
        return cls(0, Fraction(body))


ZERO = CScalar(0)
ONE = CScalar(1)
